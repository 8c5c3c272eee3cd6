#include "shiftedkeys/permutations.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace shiftedkeys {

// --------------------------------------------------------------- Permutation

void Permutation::canonicalize() {
    while (!win_.empty() && win_.back() == static_cast<int>(win_.size())) win_.pop_back();
}

Permutation Permutation::from_one_line(std::vector<int> window) {
    std::vector<bool> seen(window.size(), false);
    for (int v : window) {
        if (v < 1 || v > static_cast<int>(window.size()) || seen[static_cast<std::size_t>(v) - 1])
            throw DomainError("not a permutation window");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    Permutation p;
    p.win_ = std::move(window);
    p.canonicalize();
    return p;
}

Permutation Permutation::s(int i) {
    if (i < 1) throw DomainError("simple transposition index must be >= 1");
    return transposition(i, i + 1);
}

Permutation Permutation::transposition(int a, int b) {
    if (a == b || a < 1 || b < 1) throw DomainError("bad transposition");
    int n = std::max(a, b);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[static_cast<std::size_t>(a) - 1], w[static_cast<std::size_t>(b) - 1]);
    return from_one_line(std::move(w));
}

Permutation Permutation::cycle(const std::vector<int>& cyc) {
    if (cyc.empty()) return identity();
    int n = *std::max_element(cyc.begin(), cyc.end());
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        w[static_cast<std::size_t>(from) - 1] = to;
    }
    return from_one_line(std::move(w));
}

Permutation Permutation::reverse(int n) {
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return from_one_line(std::move(w));
}

Permutation Permutation::parse(const std::string& s) {
    if (s.find('(') != std::string::npos) {
        // cycle notation; entries split on commas or spaces
        Permutation p = identity();
        std::size_t pos = 0;
        while (pos < s.size()) {
            char ch = s[pos];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
                ++pos;
                continue;
            }
            if (ch != '(') throw ParseError("expected '(' in '" + s + "'");
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + s + "'");
            std::vector<int> cyc;
            std::string cur;
            for (std::size_t k = pos + 1; k < close; ++k) {
                char c = s[k];
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    cur.push_back(c);
                } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                    if (!cur.empty()) {
                        cyc.push_back(std::stoi(cur));
                        cur.clear();
                    }
                } else {
                    throw ParseError("bad cycle character in '" + s + "'");
                }
            }
            if (!cur.empty()) cyc.push_back(std::stoi(cur));
            if (!cyc.empty()) p = p * cycle(cyc);
            pos = close + 1;
        }
        return p;
    }
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) return identity();
    if (t.find(',') != std::string::npos) {
        std::vector<int> w;
        std::string cur;
        for (char c : t) {
            if (c == ',') {
                if (!cur.empty()) w.push_back(std::stoi(cur));
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                cur.push_back(c);
            } else {
                throw ParseError("bad one-line string '" + s + "'");
            }
        }
        if (!cur.empty()) w.push_back(std::stoi(cur));
        return from_one_line(std::move(w));
    }
    std::vector<int> w;
    for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad one-line string '" + s + "'");
        w.push_back(c - '0');
    }
    return from_one_line(std::move(w));
}

int Permutation::operator()(int i) const {
    if (i < 1) throw DomainError("permutations act on positive integers");
    return i <= window_size() ? win_[static_cast<std::size_t>(i) - 1] : i;
}

std::vector<int> Permutation::window_padded(int n) const {
    std::vector<int> w(static_cast<std::size_t>(std::max(n, window_size())));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = (*this)(static_cast<int>(i) + 1);
    return w;
}

int Permutation::length() const {
    int n = window_size(), l = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((*this)(i) > (*this)(j)) ++l;
    return l;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(win_.size());
    for (std::size_t i = 0; i < win_.size(); ++i) w[static_cast<std::size_t>(win_[i]) - 1] = static_cast<int>(i) + 1;
    return from_one_line(std::move(w));
}

Permutation operator*(const Permutation& w, const Permutation& v) {
    int n = std::max(w.window_size(), v.window_size());
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i) - 1] = w(v(i));
    return Permutation::from_one_line(std::move(r));
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (int i = 1; i < window_size(); ++i)
        if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
    return d;
}

int Permutation::max_descent() const {
    auto d = descents();
    return d.empty() ? 0 : d.back();
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    while (!w.is_identity()) {
        int i = w.descents().front();
        word.push_back(i);
        w = w * s(i); // removes the descent at i
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool Permutation::is_involution() const { return *this == inverse(); }

CellSet Permutation::rothe_diagram() const {
    CellSet d;
    int n = window_size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((*this)(i) > (*this)(j)) d.emplace(i, (*this)(j));
    return d;
}

WeakComposition Permutation::code() const {
    int n = window_size();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((*this)(i) > (*this)(j)) ++c[static_cast<std::size_t>(i) - 1];
    return WeakComposition(std::move(c));
}

bool Permutation::contains_pattern(const std::vector<int>& pattern) const {
    int n = window_size(), k = static_cast<int>(pattern.size());
    if (k == 0) return true;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> bool {
        int got = static_cast<int>(idx.size());
        if (got == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    bool lt = (*this)(idx[static_cast<std::size_t>(a)]) < (*this)(idx[static_cast<std::size_t>(b)]);
                    if (lt != (pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)])) return false;
                }
            return true;
        }
        for (int i = start; i <= n - (k - got - 1); ++i) {
            idx.push_back(i);
            if (self(self, i + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return rec(rec, 1);
}

bool Permutation::is_dominant() const { return !contains_pattern({1, 3, 2}); }

bool Permutation::is_vexillary() const { return !contains_pattern({2, 1, 4, 3}); }

std::string Permutation::str() const {
    if (win_.empty()) return "1";
    bool digits = window_size() <= 9;
    std::ostringstream out;
    for (std::size_t i = 0; i < win_.size(); ++i) {
        if (i && !digits) out << ",";
        out << win_[i];
    }
    return out.str();
}

std::string Permutation::cycle_str() const {
    std::vector<bool> done(win_.size(), false);
    std::ostringstream out;
    bool any = false;
    for (int i = 1; i <= window_size(); ++i) {
        if (done[static_cast<std::size_t>(i) - 1] || (*this)(i) == i) continue;
        out << "(";
        int j = i;
        bool first = true;
        while (!done[static_cast<std::size_t>(j) - 1]) {
            done[static_cast<std::size_t>(j) - 1] = true;
            if (!first) out << ",";
            out << j;
            first = false;
            j = (*this)(j);
        }
        out << ")";
        any = true;
    }
    return any ? out.str() : "()";
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    int n = std::max(u.window_size(), w.window_size());
    // u <= w iff #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j} for all i,j.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cw = 0;
            for (int a = 1; a <= i; ++a) {
                if (u(a) >= j) ++cu;
                if (w(a) >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    }
    return true;
}

Permutation demazure_product(const std::vector<int>& word) {
    Permutation w = Permutation::identity();
    for (int i : word) {
        if (w(i) < w(i + 1)) w = w * Permutation::s(i);
    }
    return w;
}

Permutation circ(const Permutation& u, const Permutation& v) {
    Permutation w = u;
    for (int i : v.reduced_word()) {
        if (w(i) < w(i + 1)) w = w * Permutation::s(i);
    }
    return w;
}

WeakComposition act(const Permutation& u, const WeakComposition& mu) {
    int n = std::max(u.window_size(), mu.length());
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    Permutation ui = u.inverse();
    for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i) - 1] = mu[ui(i)];
    return WeakComposition(std::move(r));
}

Permutation sorting_permutation(const WeakComposition& alpha) {
    int n = alpha.length();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return alpha[a] > alpha[b]; });
    // idx[k-1] is the row of alpha supplying lambda_k, so u(k) = idx[k-1].
    return Permutation::from_one_line(std::move(idx));
}

Permutation lehmer_decode(const WeakComposition& code) {
    int n = code.length();
    int m = n;
    for (int i = 1; i <= n; ++i) m = std::max(m, i + code[i]);
    std::vector<int> avail(static_cast<std::size_t>(m));
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    for (int i = 1; i <= m; ++i) {
        int c = code[i];
        if (c >= static_cast<int>(avail.size())) throw DomainError("code entry too large to decode");
        w.push_back(avail[static_cast<std::size_t>(c)]);
        avail.erase(avail.begin() + c);
    }
    Permutation p = Permutation::from_one_line(std::move(w));
    if (p.code() != code) throw InvariantError("lehmer_decode round-trip failed for " + code.str());
    return p;
}

Permutation dominant_of_shape(const Partition& lambda) { return lehmer_decode(lambda.as_composition()); }

// ---------------------------------------------------------------- Involution

Involution::Involution(const Permutation& p) : p_(p) {
    if (!p.is_involution()) throw DomainError("not an involution: " + p.str());
}

Involution Involution::parse(const std::string& s) { return Involution(Permutation::parse(s)); }

int Involution::cyc() const {
    int c = 0;
    for (int i = 1; i <= p_.window_size(); ++i)
        if (i < p_(i)) ++c;
    return c;
}

std::vector<std::pair<int, int>> Involution::cycles() const {
    std::vector<std::pair<int, int>> cs;
    for (int i = 1; i <= p_.window_size(); ++i)
        if (i < p_(i)) cs.emplace_back(i, p_(i));
    return cs;
}

std::vector<int> Involution::visible_descents() const {
    std::vector<int> d;
    int n = p_.window_size() + 1;
    for (int i = 1; i <= n; ++i)
        if (p_(i) > p_(i + 1) && p_(i + 1) <= i) d.push_back(i);
    return d;
}

CellSet Involution::d_o() const {
    CellSet cells;
    for (const auto& [i, j] : p_.rothe_diagram())
        if (i >= j) cells.emplace(i, j);
    return cells;
}

Involution Involution::conjugate_s(int i) const {
    Permutation si = Permutation::s(i);
    return Involution(si * p_ * si);
}

Involution Involution::shift(int N) const {
    std::vector<int> w(static_cast<std::size_t>(N + p_.window_size()));
    std::iota(w.begin(), w.begin() + N, 1);
    for (int i = 1; i <= p_.window_size(); ++i) w[static_cast<std::size_t>(N + i) - 1] = p_(i) + N;
    return Involution(Permutation::from_one_line(std::move(w)));
}

Involution dominant_involution_of_shape(const Partition& lambda) {
    if (!lambda.is_symmetric()) throw DomainError("dominant involution shape must be symmetric: " + lambda.str());
    return Involution(dominant_of_shape(lambda));
}

Involution code_to_involution(const WeakComposition& alpha) {
    Permutation p = lehmer_decode(alpha);
    if (!p.is_involution()) throw DomainError("code " + alpha.str() + " decodes to non-involution " + p.str());
    return Involution(p);
}

// ------------------------------------------------------------- FpfInvolution

namespace {
int fpf_base(int i) { return i % 2 == 1 ? i + 1 : i - 1; }
} // namespace

void FpfInvolution::canonicalize() {
    while (win_.size() >= 2) {
        std::size_t n = win_.size();
        if (win_[n - 1] == static_cast<int>(n) - 1 && win_[n - 2] == static_cast<int>(n)) {
            win_.pop_back();
            win_.pop_back();
        } else {
            break;
        }
    }
}

FpfInvolution FpfInvolution::from_window(std::vector<int> window) {
    if (window.size() % 2 != 0) throw DomainError("fpf window must have even size");
    int n = static_cast<int>(window.size());
    for (int i = 1; i <= n; ++i) {
        int v = window[static_cast<std::size_t>(i) - 1];
        if (v < 1 || v > n) throw DomainError("fpf window not stable on [n]");
        if (v == i) throw DomainError("fpf involution has fixed point at " + std::to_string(i));
        if (window[static_cast<std::size_t>(v) - 1] != i) throw DomainError("fpf window is not an involution");
    }
    FpfInvolution z;
    z.win_ = std::move(window);
    z.canonicalize();
    return z;
}

FpfInvolution FpfInvolution::parse(const std::string& s) {
    Permutation p = Permutation::parse(s);
    int n = p.window_size();
    if (n % 2 != 0) ++n;
    return from_window(p.window_padded(n));
}

std::vector<FpfInvolution> FpfInvolution::all(int n) {
    if (n % 2 != 0) throw DomainError("Ifpf_n is empty for odd n");
    std::vector<FpfInvolution> out;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && w[static_cast<std::size_t>(i)] != 0) ++i;
        if (i == n) {
            out.push_back(from_window(w));
            return;
        }
        for (int j = i + 1; j < n; ++j) {
            if (w[static_cast<std::size_t>(j)] != 0) continue;
            w[static_cast<std::size_t>(i)] = j + 1;
            w[static_cast<std::size_t>(j)] = i + 1;
            self(self);
            w[static_cast<std::size_t>(i)] = 0;
            w[static_cast<std::size_t>(j)] = 0;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

int FpfInvolution::operator()(int i) const {
    if (i < 1) throw DomainError("fpf involutions act on positive integers here");
    return i <= window_size() ? win_[static_cast<std::size_t>(i) - 1] : fpf_base(i);
}

std::vector<int> FpfInvolution::window_padded(int n) const {
    if (n % 2 != 0) ++n;
    int m = std::max(n, window_size());
    std::vector<int> w(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) w[static_cast<std::size_t>(i) - 1] = (*this)(i);
    return w;
}

std::vector<std::pair<int, int>> FpfInvolution::cycles(int n) const {
    int m = std::max(n, window_size());
    std::vector<std::pair<int, int>> cs;
    for (int i = 1; i <= m; ++i)
        if (i < (*this)(i) && (*this)(i) <= m) cs.emplace_back(i, (*this)(i));
    return cs;
}

std::vector<int> FpfInvolution::visible_descents() const {
    std::vector<int> d;
    int n = window_size() + 1;
    for (int i = 1; i <= n; ++i)
        if ((*this)(i) > (*this)(i + 1) && (*this)(i + 1) < i) d.push_back(i);
    return d;
}

std::vector<int> fpf_visible_descents(const FpfInvolution& z) { return z.visible_descents(); }

CellSet FpfInvolution::rothe_diagram() const {
    CellSet dset;
    int n = window_size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((*this)(i) > (*this)(j)) dset.emplace(i, (*this)(j));
    return dset;
}

WeakComposition FpfInvolution::code() const {
    int n = window_size();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (const auto& [i, j] : rothe_diagram()) ++c[static_cast<std::size_t>(i) - 1];
    return WeakComposition(std::move(c));
}

CellSet FpfInvolution::d_sp() const {
    CellSet cells;
    for (const auto& [i, j] : rothe_diagram())
        if (i > j) cells.emplace(i, j);
    return cells;
}

WeakComposition FpfInvolution::code_sp() const {
    int n = window_size();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (const auto& [i, j] : d_sp()) ++c[static_cast<std::size_t>(i) - 1];
    return WeakComposition(std::move(c));
}

FpfInvolution FpfInvolution::conjugate_s(int i) const {
    int need = i + 1;
    if (need % 2 != 0) ++need;
    std::vector<int> w = window_padded(std::max(need, window_size()));
    int n = static_cast<int>(w.size());
    // conjugating may move a partner across the window boundary
    if (i + 1 >= n) {
        w = window_padded(n + 2);
        n += 2;
    }
    std::vector<int> r(w.begin(), w.end());
    auto sw = [&](int a) { return a == i ? i + 1 : a == i + 1 ? i : a; };
    for (int p = 1; p <= n; ++p) r[static_cast<std::size_t>(sw(p)) - 1] = sw(w[static_cast<std::size_t>(p) - 1]);
    return from_window(std::move(r));
}

FpfInvolution FpfInvolution::shift2(int N) const {
    std::vector<int> w(static_cast<std::size_t>(2 * N + window_size()));
    for (int i = 1; i <= 2 * N; ++i) w[static_cast<std::size_t>(i) - 1] = fpf_base(i);
    for (int i = 1; i <= window_size(); ++i) w[static_cast<std::size_t>(2 * N + i) - 1] = (*this)(i) + 2 * N;
    return from_window(std::move(w));
}

std::string FpfInvolution::str() const {
    if (win_.empty()) return "()";
    std::ostringstream out;
    for (const auto& [a, b] : cycles()) out << "(" << a << "," << b << ")";
    return out.str();
}

Partition lambda_sp(const FpfInvolution& z) {
    Partition sorted = sort_to_partition(z.code_sp());
    return sorted.transpose();
}

namespace {

// The unique skew-symmetric partition whose off-diagonal Young cells equal
// `off`, when one exists.  The diagonal cells of a symmetric partition form a
// prefix (i,i), i <= h, so all prefixes are tried.
std::optional<Partition> skew_shape_from_offdiag(const CellSet& off) {
    int maxrow = 0;
    for (const auto& [i, j] : off) maxrow = std::max({maxrow, i, j});
    std::vector<int> offrow(static_cast<std::size_t>(maxrow) + 1, 0);
    for (const auto& [i, j] : off) ++offrow[static_cast<std::size_t>(i) - 1];
    for (int h = 0; h <= maxrow + 1; ++h) {
        std::vector<int> lam = offrow;
        if (static_cast<int>(lam.size()) < h) lam.resize(static_cast<std::size_t>(h), 0);
        for (int i = 1; i <= h; ++i) ++lam[static_cast<std::size_t>(i) - 1];
        WeakComposition w{lam};
        if (!w.is_partition()) continue;
        Partition cand{w};
        if (!cand.is_skew_symmetric()) continue;
        CellSet expect;
        for (const auto& [i, j] : cand.cells())
            if (i != j) expect.emplace(i, j);
        if (expect == off) return cand;
    }
    return std::nullopt;
}

CellSet offdiag_rothe(const FpfInvolution& z) {
    CellSet off;
    for (const auto& [i, j] : z.rothe_diagram())
        if (i != j) off.emplace(i, j);
    return off;
}

} // namespace

bool is_fpf_dominant(const FpfInvolution& z) { return skew_shape_from_offdiag(offdiag_rothe(z)).has_value(); }

Partition fpf_dominant_shape(const FpfInvolution& z) {
    auto shape = skew_shape_from_offdiag(offdiag_rothe(z));
    if (!shape) throw DomainError("fpf involution " + z.str() + " is not dominant");
    return *shape;
}

FpfInvolution dominant_fpf_of_shape(const Partition& lambda) {
    if (!lambda.is_skew_symmetric())
        throw DomainError("dominant fpf shape must be skew-symmetric: " + lambda.str());
    // Recursive construction: the first row pairs 1 with lambda_1 + 1, and the
    // remaining shape is the diagram with rows/columns 1 and lambda_1+1 removed
    // (re-normalized to its skew-symmetric partner).
    std::vector<std::pair<int, int>> pairs;
    auto build = [&](auto&& self, const Partition& lam, const std::vector<int>& labels) -> void {
        if (lam.empty()) return;
        int b = lam[1] + 1;
        if (static_cast<std::size_t>(b) > labels.size())
            throw InvariantError("dominant_fpf_of_shape: label pool exhausted");
        pairs.emplace_back(labels[0], labels[static_cast<std::size_t>(b) - 1]);
        std::vector<int> sub_labels;
        std::vector<int> keep;
        for (int i = 1; i <= static_cast<int>(labels.size()); ++i) {
            if (i == 1 || i == b) continue;
            keep.push_back(i);
            sub_labels.push_back(labels[static_cast<std::size_t>(i) - 1]);
        }
        std::vector<int> sub(keep.size(), 0);
        for (std::size_t r = 0; r < keep.size(); ++r) {
            int cnt = 0;
            for (std::size_t c = 0; c < keep.size(); ++c)
                if (lam.contains_cell(keep[r], keep[c])) ++cnt;
            sub[r] = cnt;
        }
        WeakComposition w{std::move(sub)};
        if (!w.is_partition()) throw InvariantError("dominant_fpf_of_shape: sub-diagram not a partition");
        Partition subp{w};
        if (!subp.is_symmetric()) throw InvariantError("dominant_fpf_of_shape: sub-diagram not symmetric");
        self(self, skew_symmetric_partner(subp), sub_labels);
    };
    int top = lambda.empty() ? 0 : lambda[1] + lambda.length() + lambda.size() + 2;
    std::vector<int> labels;
    for (int i = 1; i <= top; ++i) labels.push_back(i);
    build(build, lambda, labels);
    int n = 0;
    for (const auto& [a, b] : pairs) n = std::max({n, a, b});
    if (n % 2 != 0) ++n;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = 0;
    for (const auto& [a, b] : pairs) {
        w[static_cast<std::size_t>(a) - 1] = b;
        w[static_cast<std::size_t>(b) - 1] = a;
    }
    // positions never reached by the recursion pair up consecutively,
    // matching the base element on the residual label set
    std::vector<int> freepos;
    for (int i = 1; i <= n; ++i)
        if (w[static_cast<std::size_t>(i) - 1] == 0) freepos.push_back(i);
    if (freepos.size() % 2 != 0) throw InvariantError("dominant_fpf_of_shape: odd residual");
    for (std::size_t t = 0; t + 1 < freepos.size(); t += 2) {
        w[static_cast<std::size_t>(freepos[t]) - 1] = freepos[t + 1];
        w[static_cast<std::size_t>(freepos[t + 1]) - 1] = freepos[t];
    }
    FpfInvolution z = FpfInvolution::from_window(std::move(w));
    if (fpf_dominant_shape(z) != lambda)
        throw InvariantError("dominant_fpf_of_shape round-trip failed for " + lambda.str());
    return z;
}

} // namespace shiftedkeys
