#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftedkeys/compositions.hpp"

namespace shiftedkeys {

/// Finitely supported permutation of the positive integers, stored as its
/// minimal one-line window: w(i) = i beyond the window.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity() { return {}; }
    static Permutation from_one_line(std::vector<int> window);
    /// Simple transposition s_i = (i, i+1).
    static Permutation s(int i);
    static Permutation transposition(int a, int b);
    static Permutation cycle(const std::vector<int>& cyc);
    /// Reverse permutation n n-1 ... 2 1.
    static Permutation reverse(int n);
    /// Accepts one-line digits ("53124"), comma one-line ("5,3,1,2,4"),
    /// or cycle notation ("(1,4)(2,3)" / "(1 4)(2 3)").
    static Permutation parse(const std::string& s);

    int operator()(int i) const;
    int window_size() const { return static_cast<int>(win_.size()); }
    const std::vector<int>& window() const { return win_; }
    std::vector<int> window_padded(int n) const;
    bool is_identity() const { return win_.empty(); }

    /// Number of inversions.
    int length() const;
    Permutation inverse() const;
    /// (w * v)(i) = w(v(i)).
    friend Permutation operator*(const Permutation& w, const Permutation& v);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.win_ == b.win_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.win_ < b.win_; }

    /// Positions i with w(i) > w(i+1).
    std::vector<int> descents() const;
    int max_descent() const;
    /// A reduced word i1 i2 ... il with w = s_{i1} s_{i2} ... s_{il}.
    std::vector<int> reduced_word() const;
    bool is_involution() const;

    /// Rothe diagram {(i, w(j)) : i < j, w(i) > w(j)}.
    CellSet rothe_diagram() const;
    /// Lehmer code: c_i = number of cells in row i of the Rothe diagram.
    WeakComposition code() const;
    /// 132-avoiding, equivalently the Rothe diagram is a Young diagram.
    bool is_dominant() const;
    /// 2143-avoiding.
    bool is_vexillary() const;
    bool contains_pattern(const std::vector<int>& pattern) const;

    /// One-line digits when the window fits in 1..9, else comma separated.
    std::string str() const;
    /// Cycle notation "(1,4)(2,3)"; "()" for the identity.
    std::string cycle_str() const;

private:
    void canonicalize();
    std::vector<int> win_; // one-line; win_[i-1] = w(i)
};

/// Strong Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);
/// 0-Hecke product: w o s_i = w if w(i) > w(i+1), else w s_i.
Permutation demazure_product(const std::vector<int>& word);
Permutation circ(const Permutation& u, const Permutation& v);

/// Minimal-length u with alpha = u . lambda(alpha), where permutations act by
/// (u . mu)_i = mu_{u^{-1}(i)}.
Permutation sorting_permutation(const WeakComposition& alpha);
/// The entry-permuting action itself.
WeakComposition act(const Permutation& u, const WeakComposition& mu);

/// Lehmer-decode a code into the unique permutation with that code.
Permutation lehmer_decode(const WeakComposition& code);
/// The unique dominant permutation of shape lambda.
Permutation dominant_of_shape(const Partition& lambda);

/// Involution z = z^{-1} in S_infty.
class Involution {
public:
    Involution() = default;
    explicit Involution(const Permutation& p);
    static Involution identity() { return {}; }
    static Involution parse(const std::string& s);

    const Permutation& perm() const { return p_; }
    int operator()(int i) const { return p_(i); }
    /// Number of 2-cycles.
    int cyc() const;
    std::vector<std::pair<int, int>> cycles() const;
    /// Positions i with z(i) > z(i+1) <= i.
    std::vector<int> visible_descents() const;
    /// Cells (i,j) of the Rothe diagram with i >= j.
    CellSet d_o() const;
    Involution conjugate_s(int i) const; // s_i z s_i
    bool is_vexillary() const { return p_.is_vexillary(); }
    bool is_dominant() const { return p_.is_dominant(); }
    /// z fixing 1..N, then mapping i+N to z(i)+N.
    Involution shift(int N) const;

    friend bool operator==(const Involution& a, const Involution& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Involution& a, const Involution& b) { return !(a == b); }
    friend bool operator<(const Involution& a, const Involution& b) { return a.p_ < b.p_; }

    std::string str() const { return p_.cycle_str(); }

private:
    Permutation p_;
};

/// The unique dominant involution of symmetric shape lambda.
Involution dominant_involution_of_shape(const Partition& lambda);
/// Lehmer-decode; fails when the decoded permutation is not an involution.
Involution code_to_involution(const WeakComposition& alpha);

/// Fixed-point-free involution agreeing with 1_fpf = ...(1 2)(3 4)... beyond
/// its window.  The window has even size and is stable under z.
class FpfInvolution {
public:
    FpfInvolution() = default; // 1_fpf

    static FpfInvolution base() { return {}; }
    static FpfInvolution from_window(std::vector<int> window);
    static FpfInvolution parse(const std::string& s);
    /// All elements of Ifpf_n (n even), as windows of size n.
    static std::vector<FpfInvolution> all(int n);

    int operator()(int i) const;
    int window_size() const { return static_cast<int>(win_.size()); }
    /// Window of size max(window_size, n) padded with 1_fpf values.
    std::vector<int> window_padded(int n) const;
    bool is_base() const { return win_.empty(); }

    std::vector<std::pair<int, int>> cycles(int n = 0) const;
    /// Positions i with z(i) > z(i+1) < i.
    std::vector<int> visible_descents() const;
    CellSet rothe_diagram() const;
    WeakComposition code() const;
    /// Cells (i,j) of the Rothe diagram with i > j.
    CellSet d_sp() const;
    /// Row counts of d_sp.
    WeakComposition code_sp() const;
    FpfInvolution conjugate_s(int i) const; // s_i z s_i
    /// z mapping i to 1_fpf(i) for i in [2N] and i+2N to z(i)+2N.
    FpfInvolution shift2(int N) const;

    friend bool operator==(const FpfInvolution& a, const FpfInvolution& b) { return a.win_ == b.win_; }
    friend bool operator!=(const FpfInvolution& a, const FpfInvolution& b) { return !(a == b); }
    friend bool operator<(const FpfInvolution& a, const FpfInvolution& b) { return a.win_ < b.win_; }

    std::string str() const;

private:
    void canonicalize();
    std::vector<int> win_;
};

std::vector<int> fpf_visible_descents(const FpfInvolution& z);

/// Transpose of the partition sorting the row counts of d_sp; always strict.
Partition lambda_sp(const FpfInvolution& z);

/// Shape of a dominant fpf involution: the unique skew-symmetric lambda whose
/// off-diagonal Young cells match the off-diagonal Rothe cells of z.
Partition fpf_dominant_shape(const FpfInvolution& z);
bool is_fpf_dominant(const FpfInvolution& z);
/// Inverse of fpf_dominant_shape.
FpfInvolution dominant_fpf_of_shape(const Partition& lambda);

} // namespace shiftedkeys
