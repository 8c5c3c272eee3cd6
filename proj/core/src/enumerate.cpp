#include "shiftedkeys/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace shiftedkeys {

std::vector<Partition> partitions_of(int n) { return partitions_of_in_box(n, n, n); }

std::vector<Partition> partitions_of_in_box(int n, int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= rows) return;
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, std::min(cols, n));
    return out;
}

std::vector<Partition> symmetric_partitions_in_box(int box) {
    // symmetric partitions inside box x box correspond to strict partitions
    // mu with parts <= box via half_le
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart) -> void {
        out.push_back(symmetric_closure_half_le(Partition(std::vector<int>(cur))));
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, p - 1);
            cur.pop_back();
        }
    };
    rec(rec, box);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeakComposition> rearrangements(const Partition& lambda, int len) {
    std::vector<WeakComposition> out;
    if (lambda.length() > len) return out;
    std::vector<int> slots(static_cast<std::size_t>(len), 0);
    std::vector<int> parts = lambda.parts();
    // place groups of equal parts into increasing position sets
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == parts.size()) {
            out.emplace_back(std::vector<int>(slots));
            return;
        }
        int p = parts[idx];
        std::size_t run = idx;
        while (run < parts.size() && parts[run] == p) ++run;
        std::size_t k = run - idx; // multiplicity
        // choose k free slots for value p
        std::vector<int> freeslots;
        for (int i = 0; i < len; ++i)
            if (slots[static_cast<std::size_t>(i)] == 0) freeslots.push_back(i);
        std::vector<std::size_t> pick(k);
        auto choose = [&](auto&& cself, std::size_t start, std::size_t got) -> void {
            if (got == k) {
                for (std::size_t t = 0; t < k; ++t) slots[static_cast<std::size_t>(freeslots[pick[t]])] = p;
                self(self, run);
                for (std::size_t t = 0; t < k; ++t) slots[static_cast<std::size_t>(freeslots[pick[t]])] = 0;
                return;
            }
            for (std::size_t i = start; i + (k - got) <= freeslots.size(); ++i) {
                pick[got] = i;
                cself(cself, i + 1, got + 1);
            }
        };
        choose(choose, 0, 0);
    };
    rec(rec, 0);
    return out;
}

std::vector<WeakComposition> symmetric_compositions(int n, int len) {
    std::vector<WeakComposition> out;
    for (const auto& lam : partitions_of(n)) {
        if (!lam.is_symmetric()) continue;
        auto re = rearrangements(lam, len);
        out.insert(out.end(), re.begin(), re.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<WeakComposition> skew_symmetric_compositions(int n, int len) {
    std::vector<WeakComposition> out;
    for (const auto& lam : partitions_of(n)) {
        if (!lam.is_skew_symmetric()) continue;
        auto re = rearrangements(lam, len);
        out.insert(out.end(), re.begin(), re.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> strict_partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p - 1);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n);
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Involution> involutions(int n) {
    std::vector<Involution> out;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && w[static_cast<std::size_t>(i)] != 0) ++i;
        if (i == n) {
            out.push_back(Involution(Permutation::from_one_line(w)));
            return;
        }
        w[static_cast<std::size_t>(i)] = i + 1; // fixed point
        self(self);
        w[static_cast<std::size_t>(i)] = 0;
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
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int max_strict_length(int d) {
    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= d) ++k;
    return k;
}

} // namespace shiftedkeys
