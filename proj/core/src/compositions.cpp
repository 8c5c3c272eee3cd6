#include "shiftedkeys/compositions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace shiftedkeys {

namespace {
void strip(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
} // namespace

WeakComposition::WeakComposition(std::initializer_list<int> parts) : parts_(parts) {
    for (int x : parts_)
        if (x < 0) throw DomainError("weak composition part must be nonnegative");
    strip(parts_);
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x < 0) throw DomainError("weak composition part must be nonnegative");
    strip(parts_);
}

WeakComposition WeakComposition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw ParseError("empty entry in composition '" + s + "'");
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw ParseError("bad character in composition '" + s + "'");
        }
    }
    if (!cur.empty()) flush();
    else if (!parts.empty()) throw ParseError("trailing comma in composition '" + s + "'");
    return WeakComposition(std::move(parts));
}

int WeakComposition::operator[](int i) const {
    if (i < 1) throw DomainError("composition index is 1-based");
    return i <= length() ? parts_[static_cast<std::size_t>(i) - 1] : 0;
}

int WeakComposition::size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

int WeakComposition::max_part() const {
    int m = 0;
    for (int x : parts_) m = std::max(m, x);
    return m;
}

WeakComposition WeakComposition::swapped(int i) const {
    std::vector<int> v = parts_;
    if (static_cast<int>(v.size()) < i + 1) v.resize(static_cast<std::size_t>(i) + 1, 0);
    std::swap(v[static_cast<std::size_t>(i) - 1], v[static_cast<std::size_t>(i)]);
    return WeakComposition(std::move(v));
}

WeakComposition WeakComposition::bumped(int i, int d) const {
    std::vector<int> v = parts_;
    if (static_cast<int>(v.size()) < i) v.resize(static_cast<std::size_t>(i), 0);
    v[static_cast<std::size_t>(i) - 1] += d;
    return WeakComposition(std::move(v));
}

bool WeakComposition::is_partition() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) return false;
    return true;
}

std::string WeakComposition::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    return out.str();
}

bool lex_less(const WeakComposition& a, const WeakComposition& b) {
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// ----------------------------------------------------------------- Partition

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(const WeakComposition& w) : w_(w) {
    if (!w_.is_partition()) throw DomainError("parts are not weakly decreasing: " + w_.str());
}

Partition::Partition(std::vector<int> parts) : Partition(WeakComposition(std::move(parts))) {}

Partition Partition::parse(const std::string& s) { return Partition(WeakComposition::parse(s)); }

Partition Partition::staircase(int n) {
    std::vector<int> v;
    for (int i = n - 1; i >= 1; --i) v.push_back(i);
    return Partition(std::move(v));
}

Partition Partition::transpose() const {
    std::vector<int> t;
    int cols = w_.empty() ? 0 : w_[1];
    t.reserve(static_cast<std::size_t>(cols));
    for (int j = 1; j <= cols; ++j) {
        int cnt = 0;
        for (int i = 1; i <= length(); ++i)
            if (w_[i] >= j) ++cnt;
        t.push_back(cnt);
    }
    return Partition(std::move(t));
}

CellSet Partition::cells() const {
    CellSet cs;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= w_[i]; ++j) cs.emplace(i, j);
    return cs;
}

bool Partition::is_strict() const {
    for (int i = 1; i < length(); ++i)
        if (w_[i] == w_[i + 1]) return false;
    return true;
}

bool Partition::is_symmetric() const { return *this == transpose(); }

std::vector<Cell> Partition::addable_corners() const {
    std::vector<Cell> cs;
    for (int i = 1; i <= length() + 1; ++i) {
        int above = i == 1 ? -1 : w_[i - 1];
        if (i == 1 || w_[i] < above) cs.emplace_back(i, w_[i] + 1);
    }
    return cs;
}

std::vector<Cell> Partition::removable_corners() const {
    std::vector<Cell> cs;
    for (int i = 1; i <= length(); ++i) {
        if (w_[i] > w_[i + 1]) cs.emplace_back(i, w_[i]);
    }
    return cs;
}

bool Partition::is_skew_symmetric() const {
    if (!is_symmetric()) return false;
    auto rem = removable_corners();
    auto add = addable_corners();
    auto has = [](const std::vector<Cell>& v, Cell c) { return std::find(v.begin(), v.end(), c) != v.end(); };
    for (const auto& [i, j] : rem) {
        if (i == j && has(add, {i, i + 1})) return false;
    }
    for (const auto& [i, j] : add) {
        if (i == j && has(rem, {i, i - 1})) return false;
    }
    return true;
}

int Partition::diagonal_cells() const {
    int h = 0;
    for (int i = 1; i <= length(); ++i)
        if (w_[i] >= i) ++h;
    return h;
}

Partition sort_to_partition(const WeakComposition& alpha) {
    std::vector<int> v = alpha.parts();
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

bool is_symmetric(const WeakComposition& alpha) { return sort_to_partition(alpha).is_symmetric(); }

bool is_skew_symmetric(const WeakComposition& alpha) { return sort_to_partition(alpha).is_skew_symmetric(); }

Partition half_lt(const Partition& lambda) {
    if (!lambda.is_symmetric()) throw DomainError("half_lt needs a symmetric partition, got " + lambda.str());
    std::vector<int> v;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda[i] - i > 0) v.push_back(lambda[i] - i);
    return Partition(std::move(v));
}

Partition half_le(const Partition& lambda) {
    if (!lambda.is_symmetric()) throw DomainError("half_le needs a symmetric partition, got " + lambda.str());
    std::vector<int> v;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda[i] - (i - 1) > 0) v.push_back(lambda[i] - (i - 1));
    return Partition(std::move(v));
}

Partition symmetric_closure_half_le(const Partition& mu) {
    if (!mu.is_strict()) throw DomainError("shifted shape index must be strict: " + mu.str());
    int r = mu.length();
    // Cells weakly above the diagonal are (i, i+j-1) for (i,j) in D_mu;
    // the symmetric closure adds their transposes.
    int cols = r == 0 ? 0 : r + mu[1] - 1;
    std::vector<int> lam(static_cast<std::size_t>(cols), 0);
    for (int i = 1; i <= r; ++i) lam[static_cast<std::size_t>(i) - 1] = mu[i] + i - 1;
    for (int i = r + 1; i <= cols; ++i) {
        int cnt = 0;
        for (int j = 1; j <= r; ++j)
            if (j < i && i <= j + mu[j] - 1) ++cnt;
        lam[static_cast<std::size_t>(i) - 1] = cnt;
    }
    Partition res{WeakComposition(std::move(lam))};
    if (half_le(res) != mu) throw InvariantError("symmetric_closure_half_le failed for " + mu.str());
    return res;
}

Partition skew_symmetric_closure_half_lt(const Partition& mu) {
    if (!mu.is_strict()) throw DomainError("shifted shape index must be strict: " + mu.str());
    int r = mu.length();
    if (r == 0) return Partition{};
    // Strictly-above-diagonal cells are (i, i+j) for (i,j) in D_mu; rows
    // 1..r gain their diagonal cell, the rest comes from transposition.
    int cols = r + mu[1];
    std::vector<int> lam(static_cast<std::size_t>(cols), 0);
    for (int i = 1; i <= r; ++i) lam[static_cast<std::size_t>(i) - 1] = mu[i] + i;
    for (int i = r + 1; i <= cols; ++i) {
        int cnt = 0;
        for (int j = 1; j <= r; ++j)
            if (j < i && i <= j + mu[j]) ++cnt;
        lam[static_cast<std::size_t>(i) - 1] = cnt;
    }
    Partition base{WeakComposition(std::move(lam))};
    Partition res = skew_symmetric_partner(base);
    if (half_lt(res) != mu) throw InvariantError("skew_symmetric_closure_half_lt failed for " + mu.str());
    return res;
}

Partition skew_symmetric_partner(const Partition& lambda) {
    if (!lambda.is_symmetric()) throw DomainError("skew_symmetric_partner needs a symmetric partition");
    if (lambda.is_skew_symmetric()) return lambda;
    // Exactly one diagonal corner can be toggled; the toggle is skew-symmetric.
    for (const auto& [i, j] : lambda.addable_corners()) {
        if (i != j) continue;
        Partition cand{lambda.as_composition().bumped(i, +1)};
        if (cand.is_skew_symmetric()) return cand;
    }
    for (const auto& [i, j] : lambda.removable_corners()) {
        if (i != j) continue;
        Partition cand{lambda.as_composition().bumped(i, -1)};
        if (cand.is_skew_symmetric()) return cand;
    }
    throw InvariantError("no skew-symmetric partner found for " + lambda.str());
}

std::vector<long long> count_skew_symmetric(int n) {
    if (n < 0) throw DomainError("count_skew_symmetric: n must be >= 0");
    // Skew-symmetric partitions correspond to strict partitions la via
    // half_lt; the closure has size 2*|la| + len(la) + [la ends in 1].
    std::vector<long long> ret(static_cast<std::size_t>(n) + 1, 0);
    ret[0] = 1;
    std::vector<int> cur;
    // enumerate strict partitions with sum <= n/2 + 1 by descending parts
    auto rec = [&](auto&& self, int maxpart, int remaining) -> void {
        if (!cur.empty()) {
            int sum = 0;
            for (int x : cur) sum += x;
            long long size = 2LL * sum + static_cast<long long>(cur.size()) + (cur.back() == 1 ? 1 : 0);
            if (size <= n) ret[static_cast<std::size_t>(size)] += 1;
        }
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, p - 1, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, n / 2 + 1, n / 2 + 1);
    return ret;
}

} // namespace shiftedkeys
