#include "shiftedkeys/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace shiftedkeys {

// ---------------------------------------------------------------- BetaScalar

BetaScalar::BetaScalar(long v) {
    if (v != 0) c_.push_back(BigInt(v));
}

BetaScalar::BetaScalar(BigInt v) {
    if (v != 0) c_.push_back(std::move(v));
}

BetaScalar BetaScalar::of(BigInt c, int k) {
    BetaScalar r;
    if (c != 0) {
        if (k < 0) throw DomainError("negative beta power");
        r.c_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
        r.c_.back() = std::move(c);
    }
    return r;
}

BetaScalar BetaScalar::beta(int k) { return of(BigInt(1), k); }

bool BetaScalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const BigInt& BetaScalar::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return zero;
    return c_[static_cast<std::size_t>(k)];
}

void BetaScalar::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BetaScalar BetaScalar::operator-() const {
    BetaScalar r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

BetaScalar& BetaScalar::operator+=(const BetaScalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

BetaScalar& BetaScalar::operator-=(const BetaScalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

BetaScalar operator*(const BetaScalar& a, const BetaScalar& b) {
    BetaScalar r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

BetaScalar BetaScalar::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    BetaScalar r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), BigInt(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

BigInt BetaScalar::at_beta(const BigInt& v) const {
    BigInt r(0);
    for (std::size_t k = c_.size(); k-- > 0;) r = r * v + c_[k];
    return r;
}

bool BetaScalar::is_natural() const {
    for (const auto& x : c_)
        if (x < 0) return false;
    return true;
}

bool BetaScalar::is_monomial() const {
    int nonzero = 0;
    for (const auto& x : c_)
        if (x != 0) ++nonzero;
    return nonzero <= 1;
}

bool BetaScalar::divisible_by(const BigInt& k) const {
    for (const auto& x : c_)
        if (x % k != 0) return false;
    return true;
}

BetaScalar BetaScalar::exact_div(const BigInt& k) const {
    BetaScalar r(*this);
    for (auto& x : r.c_) {
        if (x % k != 0) throw InvariantError("BetaScalar::exact_div: remainder dividing by " + k.str());
        x /= k;
    }
    return r;
}

std::string BetaScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigInt a = c_[k];
        if (!first) {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        if (k == 0) {
            out << a.str();
        } else {
            if (a == 1) {
            } else if (a == -1 && first) {
                out << "-";
            } else {
                out << a.str() << "*";
            }
            out << "b";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

// ----------------------------------------------------------------- Exponents

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool lex_less(const Exponents& a, const Exponents& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int ai = i < a.size() ? a[i] : 0;
        int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai < bi;
    }
    return false;
}

Exponents exps_add(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    canonicalize(r);
    return r;
}

void canonicalize(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

// ------------------------------------------------------------------ Monomial

int Monomial::degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

int Monomial::var_bound() const {
    for (int i = kMaxVars; i >= 1; --i)
        if (e[static_cast<std::size_t>(i) - 1] != 0) return i;
    return 0;
}

Monomial pack_exponents(const Exponents& ex) {
    Monomial m;
    if (static_cast<int>(ex.size()) > kMaxVars) {
        Exponents c = ex;
        canonicalize(c);
        if (static_cast<int>(c.size()) > kMaxVars)
            throw GuardError("monomial uses more than " + std::to_string(kMaxVars) + " variables");
        for (std::size_t i = 0; i < c.size(); ++i) m.e[i] = static_cast<std::uint16_t>(c[i]);
        return m;
    }
    for (std::size_t i = 0; i < ex.size(); ++i) {
        if (ex[i] < 0) throw DomainError("negative exponent");
        if (ex[i] > 0xffff) throw GuardError("exponent exceeds packed capacity");
        m.e[i] = static_cast<std::uint16_t>(ex[i]);
    }
    return m;
}

Exponents unpack_exponents(const Monomial& m) {
    Exponents e;
    int n = m.var_bound();
    e.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e.push_back(m.e[static_cast<std::size_t>(i)]);
    return e;
}

namespace {

Monomial mono_add(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = static_cast<unsigned>(a.e[i]) + static_cast<unsigned>(b.e[i]);
        if (s > 0xffff) throw GuardError("exponent exceeds packed capacity");
        r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

} // namespace

// --------------------------------------------------------------------- Guard

namespace {
Guard g_guard;
}

Guard& guard() { return g_guard; }
void set_guard(const Guard& g) { g_guard = g; }

// ----------------------------------------------------- MultivariatePolynomial

Poly Poly::from_terms(std::vector<Term>&& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    p.t_.reserve(raw.size());
    for (auto& [m, c] : raw) {
        if (c.is_zero()) continue;
        if (!p.t_.empty() && p.t_.back().first == m) {
            p.t_.back().second += c;
            if (p.t_.back().second.is_zero()) p.t_.pop_back();
        } else {
            p.t_.emplace_back(m, std::move(c));
        }
    }
    p.check_guard();
    return p;
}

Poly Poly::constant(BetaScalar c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace_back(Monomial{}, std::move(c));
    return p;
}

Poly Poly::monomial(Exponents e, BetaScalar c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace_back(pack_exponents(e), std::move(c));
    return p;
}

Poly Poly::variable(int i) {
    if (i < 1) throw DomainError("variable index must be positive");
    Exponents e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return monomial(std::move(e));
}

Poly Poly::x_power(const Exponents& alpha) { return monomial(alpha); }

std::vector<std::pair<Exponents, BetaScalar>> Poly::terms() const {
    std::vector<std::pair<Exponents, BetaScalar>> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) out.emplace_back(unpack_exponents(m), c);
    return out;
}

int Poly::var_bound() const {
    int n = 0;
    for (const auto& [m, c] : t_) n = std::max(n, m.var_bound());
    return n;
}

int Poly::min_x_degree() const {
    if (is_zero()) return 0;
    int d = -1;
    for (const auto& [m, c] : t_) {
        int t = m.degree();
        if (d < 0 || t < d) d = t;
    }
    return d;
}

int Poly::max_x_degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

const BetaScalar& Poly::coeff(const Exponents& e) const {
    static const BetaScalar zero;
    Monomial key = pack_exponents(e);
    auto it = std::lower_bound(t_.begin(), t_.end(), key,
                               [](const Term& t, const Monomial& m) { return t.first < m; });
    if (it == t_.end() || !(it->first == key)) return zero;
    return it->second;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

void Poly::add_term(const Exponents& e, const BetaScalar& c) {
    if (c.is_zero()) return;
    Monomial key = pack_exponents(e);
    auto it = std::lower_bound(t_.begin(), t_.end(), key,
                               [](const Term& t, const Monomial& m) { return t.first < m; });
    if (it != t_.end() && it->first == key) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    } else {
        t_.emplace(it, key, c);
    }
}

namespace {

// merge b into a with sign
void merge_into(std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool negate) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        bool takea = j == b.size() || (i < a.size() && a[i].first < b[j].first);
        bool takeb = i == a.size() || (j < b.size() && b[j].first < a[i].first);
        if (takea) {
            out.push_back(std::move(a[i++]));
        } else if (takeb) {
            out.emplace_back(b[j].first, negate ? -b[j].second : b[j].second);
            ++j;
        } else {
            BetaScalar c = a[i].second;
            if (negate) c -= b[j].second;
            else c += b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

} // namespace

Poly& Poly::operator+=(const Poly& o) {
    merge_into(t_, o.t_, false);
    check_guard();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    merge_into(t_, o.t_, true);
    check_guard();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    const Poly& small = a.term_count() <= b.term_count() ? a : b;
    const Poly& big = a.term_count() <= b.term_count() ? b : a;
    // accumulate shifted copies of the bigger factor, merging as we go
    for (const auto& [ms, cs] : small.t_) {
        std::vector<Poly::Term> shifted;
        shifted.reserve(big.t_.size());
        for (const auto& [mb, cb] : big.t_) shifted.emplace_back(mono_add(ms, mb), cs * cb);
        merge_into(r.t_, shifted, false);
        r.check_guard();
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scalar_mul(const BetaScalar& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& [m, v] : t_) {
        BetaScalar p = v * c;
        if (!p.is_zero()) r.t_.emplace_back(m, std::move(p));
    }
    return r;
}

std::pair<Exponents, BetaScalar> Poly::lex_min_term() const {
    if (is_zero()) throw DomainError("lex_min_term of the zero polynomial");
    return {unpack_exponents(t_.front().first), t_.front().second};
}

Poly Poly::exact_div_int(const BigInt& k) const {
    if (k == 0) throw DomainError("division by zero");
    Poly r(*this);
    for (auto& [m, c] : r.t_) c = c.exact_div(k);
    return r;
}

Poly Poly::homogeneous_part(int d, Grading g) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        int xd = m.degree();
        if (g == Grading::XDegree) {
            if (xd == d) r.t_.emplace_back(m, c);
        } else {
            int k = xd - d;
            if (k >= 0 && c.coeff(k) != 0) r.t_.emplace_back(m, BetaScalar::of(c.coeff(k), k));
        }
    }
    return r;
}

bool Poly::is_homogeneous(Grading g) const {
    if (is_zero()) return true;
    int d = -1;
    for (const auto& [m, c] : t_) {
        int xd = m.degree();
        if (g == Grading::XDegree) {
            if (d < 0) d = xd;
            if (xd != d) return false;
        } else {
            for (int k = 0; k <= c.degree(); ++k) {
                if (c.coeff(k) == 0) continue;
                if (d < 0) d = xd - k;
                if (xd - k != d) return false;
            }
        }
    }
    return true;
}

Poly Poly::substitute_beta(const BigInt& v) const {
    std::vector<Term> raw;
    raw.reserve(t_.size());
    for (const auto& [m, c] : t_) raw.emplace_back(m, BetaScalar(c.at_beta(v)));
    return from_terms(std::move(raw));
}

Poly Poly::truncate_vars(int m) const {
    Poly r;
    for (const auto& [mono, c] : t_) {
        if (mono.var_bound() <= m) r.t_.emplace_back(mono, c);
    }
    return r;
}

Poly Poly::exact_div_monomial(const Exponents& e) const {
    Monomial d = pack_exponents(e);
    Poly r(*this);
    for (auto& [m, c] : r.t_) {
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (m.e[i] < d.e[i]) throw InvariantError("exact_div_monomial: term not divisible");
            m.e[i] = static_cast<std::uint16_t>(m.e[i] - d.e[i]);
        }
    }
    // subtracting a fixed monomial preserves the term order
    return r;
}

bool Poly::is_natural() const {
    for (const auto& [m, c] : t_)
        if (!c.is_natural()) return false;
    return true;
}

bool Poly::beta_free() const {
    for (const auto& [m, c] : t_)
        if (c.degree() > 0) return false;
    return true;
}

Poly Poly::swap_vars(int i) const {
    if (i < 1 || i >= kMaxVars) throw DomainError("swap_vars index out of range");
    std::vector<Term> raw = t_;
    for (auto& [m, c] : raw) std::swap(m.e[static_cast<std::size_t>(i) - 1], m.e[static_cast<std::size_t>(i)]);
    return from_terms(std::move(raw));
}

Poly Poly::divided_difference(int i) const {
    if (i < 1 || i >= kMaxVars) throw DomainError("operator index out of range");
    std::size_t ia = static_cast<std::size_t>(i) - 1, ib = static_cast<std::size_t>(i);
    std::vector<Term> raw;
    raw.reserve(t_.size() * 2);
    for (const auto& [m, c] : t_) {
        int a = m.e[ia], b = m.e[ib];
        if (a == b) continue;
        int lo = std::min(a, b), k = a > b ? a - b : b - a;
        BetaScalar coeff = a > b ? c : -c;
        Monomial base = m;
        for (int t = 0; t < k; ++t) {
            base.e[ia] = static_cast<std::uint16_t>(lo + t);
            base.e[ib] = static_cast<std::uint16_t>(lo + k - 1 - t);
            raw.emplace_back(base, coeff);
        }
    }
    return from_terms(std::move(raw));
}

Poly Poly::times_var(int i) const {
    if (i < 1 || i > kMaxVars) throw DomainError("variable index out of range");
    std::vector<Term> raw = t_;
    for (auto& [m, c] : raw) {
        if (m.e[static_cast<std::size_t>(i) - 1] == 0xffff) throw GuardError("exponent exceeds packed capacity");
        ++m.e[static_cast<std::size_t>(i) - 1];
    }
    // multiplying by a single variable preserves the lex order of terms
    Poly r;
    r.t_ = std::move(raw);
    return r;
}

Poly Poly::beta_twist(int i) const {
    Poly r = times_var(i + 1).scalar_mul(BetaScalar::beta());
    r += *this;
    return r;
}

Poly Poly::dd_pipeline(int i, bool mul_x, bool twist) const {
    if (i < 1 || i >= kMaxVars) throw DomainError("operator index out of range");
    std::size_t ia = static_cast<std::size_t>(i) - 1, ib = static_cast<std::size_t>(i);
    std::vector<Term> raw;
    raw.reserve(t_.size() * 3);
    auto emit = [&](Monomial m, const BetaScalar& c) {
        int a = m.e[ia], b = m.e[ib];
        if (a == b) return;
        int lo = std::min(a, b), k = a > b ? a - b : b - a;
        BetaScalar coeff = a > b ? c : -c;
        for (int t = 0; t < k; ++t) {
            m.e[ia] = static_cast<std::uint16_t>(lo + t);
            m.e[ib] = static_cast<std::uint16_t>(lo + k - 1 - t);
            raw.emplace_back(m, coeff);
        }
    };
    for (const auto& [m0, c] : t_) {
        Monomial m = m0;
        if (mul_x) {
            if (m.e[ia] == 0xffff) throw GuardError("exponent exceeds packed capacity");
            ++m.e[ia];
        }
        emit(m, c);
        if (twist) {
            if (m.e[ib] == 0xffff) throw GuardError("exponent exceeds packed capacity");
            ++m.e[ib];
            emit(m, c.shifted(1));
        }
    }
    return from_terms(std::move(raw));
}

void Poly::check_guard() const {
    if (t_.size() > g_guard.max_terms)
        throw GuardError("polynomial term count exceeds guard (" + std::to_string(g_guard.max_terms) + ")");
    if (!t_.empty()) {
        int d = t_.back().first.degree();
        if (d > g_guard.max_degree)
            throw GuardError("polynomial degree exceeds guard (" + std::to_string(g_guard.max_degree) + ")");
    }
}

Poly oplus(const Poly& f, const Poly& g) {
    Poly r = f + g;
    r += (f * g).scalar_mul(BetaScalar::beta());
    return r;
}

// -------------------------------------------------------------------- output

namespace {

// One printed term: coefficient c * b^k * x^e.
struct SplitTerm {
    Exponents e;
    int k;
    BigInt c;
};

// Canonical order: total x-degree ascending, then exponents lexicographically
// descending, then b-degree ascending.
bool canonical_term_less(const SplitTerm& a, const SplitTerm& b) {
    int da = total_degree(a.e), db = total_degree(b.e);
    if (da != db) return da < db;
    if (a.e != b.e) return lex_less(b.e, a.e);
    return a.k < b.k;
}

std::vector<SplitTerm> split_terms(const Poly& p) {
    std::vector<SplitTerm> ts;
    for (const auto& [m, c] : p.raw_terms()) {
        Exponents e = unpack_exponents(m);
        for (int k = 0; k <= c.degree(); ++k) {
            if (c.coeff(k) != 0) ts.push_back({e, k, c.coeff(k)});
        }
    }
    std::sort(ts.begin(), ts.end(), canonical_term_less);
    return ts;
}

} // namespace

std::string Poly::to_text() const {
    if (is_zero()) return "0";
    auto ts = split_terms(*this);
    std::ostringstream out;
    bool first = true;
    for (const auto& t : ts) {
        BigInt a = t.c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        if (a != 1 || (t.k == 0 && t.e.empty())) factors.push_back(a.str());
        if (t.k > 0) factors.push_back(t.k == 1 ? "b" : "b^" + std::to_string(t.k));
        for (std::size_t i = 0; i < t.e.size(); ++i) {
            if (t.e[i] == 0) continue;
            std::string f = "x" + std::to_string(i + 1);
            if (t.e[i] > 1) f += "^" + std::to_string(t.e[i]);
            factors.push_back(f);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

std::string Poly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : split_terms(*this)) {
        nlohmann::json jt;
        jt["beta"] = t.k;
        jt["exps"] = t.e;
        jt["coeff"] = t.c.str();
        terms.push_back(std::move(jt));
    }
    nlohmann::json j;
    j["terms"] = std::move(terms);
    return j.dump();
}

std::string Poly::to_latex() const {
    if (is_zero()) return "0";
    auto ts = split_terms(*this);
    std::ostringstream out;
    bool first = true;
    for (const auto& t : ts) {
        BigInt a = t.c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool havevars = t.k > 0 || total_degree(t.e) > 0;
        bool wrote = false;
        if (a != 1 || !havevars) {
            out << a.str();
            wrote = true;
        }
        if (t.k > 0) {
            out << "\\beta";
            if (t.k > 1) out << "^{" << t.k << "}";
            wrote = true;
        }
        for (std::size_t i = 0; i < t.e.size(); ++i) {
            if (t.e[i] == 0) continue;
            if (wrote) out << " ";
            out << "x_{" << (i + 1) << "}";
            if (t.e[i] > 1) out << "^{" << t.e[i] << "}";
            wrote = true;
        }
    }
    return out.str();
}

Poly Poly::from_json(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial json: ") + e.what());
    }
    if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("polynomial json lacks terms array");
    Poly p;
    std::vector<Term> raw;
    for (const auto& jt : j["terms"]) {
        int k = jt.at("beta").get<int>();
        Exponents e = jt.at("exps").get<std::vector<int>>();
        BigInt c(jt.at("coeff").get<std::string>());
        raw.emplace_back(pack_exponents(e), BetaScalar::of(c, k));
    }
    return from_terms(std::move(raw));
}

// ------------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    BigInt integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(pos) + " in '" + s + "'");
        return BigInt(s.substr(start, pos - start));
    }
    int small_int() { return static_cast<int>(integer()); }
};

} // namespace

Poly Poly::parse(const std::string& str) {
    Lexer lx(str);
    std::vector<Term> raw;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            sign = lx.get() == '-' ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected + or - between terms in '" + str + "'");
        }
        first = false;
        BigInt c(1);
        int bpow = 0;
        Exponents e;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char ch = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                c *= lx.integer();
                saw_factor = true;
            } else if (ch == 'b') {
                lx.get();
                int k = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    k = lx.small_int();
                }
                bpow += k;
                saw_factor = true;
            } else if (ch == 'x') {
                lx.get();
                int i = lx.small_int();
                if (i < 1) throw ParseError("variable index must be >= 1");
                int k = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    k = lx.small_int();
                }
                if (static_cast<int>(e.size()) < i) e.resize(static_cast<std::size_t>(i), 0);
                e[static_cast<std::size_t>(i) - 1] += k;
                saw_factor = true;
            } else {
                throw ParseError("unexpected character '" + std::string(1, ch) + "' in '" + str + "'");
            }
            if (lx.peek() == '*') {
                lx.get();
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw ParseError("empty term in '" + str + "'");
        raw.emplace_back(pack_exponents(e), BetaScalar::of(sign * c, bpow));
    }
    return from_terms(std::move(raw));
}

} // namespace shiftedkeys
