#include "partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dp {

Partition::Partition(std::vector<int> e) : entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("Partition: no entries");
    for (int v : entries)
        if (v < 0) throw std::invalid_argument("Partition: negative entry");
}

int Partition::n() const {
    return std::accumulate(entries.begin(), entries.end(), 0) - 1;
}

bool Partition::proper() const {
    return std::all_of(entries.begin(), entries.end(), [](int v) { return v > 0; });
}

int Partition::zero_count() const {
    return static_cast<int>(std::count(entries.begin(), entries.end(), 0));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < entries.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(entries[j]);
    }
    return s + ")";
}

int compare(const Partition& a, const Partition& b) {
    if (a.entries.size() != b.entries.size() || a.n() != b.n())
        throw std::invalid_argument("compare: partitions of different shape");
    for (std::size_t j = 0; j < a.entries.size(); ++j) {
        if (a.entries[j] < b.entries[j]) return -1;
        if (a.entries[j] > b.entries[j]) return 1;
    }
    return 0;
}

namespace {

// Compositions of total into parts entries each >= lo, lexicographic.
void compositions(int total, int parts, int lo, std::vector<int>& cur,
                  std::vector<Partition>& out) {
    if (parts == 1) {
        if (total >= lo) {
            cur.push_back(total);
            out.push_back(Partition(cur));
            cur.pop_back();
        }
        return;
    }
    for (int v = lo; v <= total - lo * (parts - 1); ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, lo, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_surjections(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("enumerate_surjections: negative index");
    std::vector<Partition> out;
    if (k > n) return out;
    std::vector<int> cur;
    compositions(n + 1, k + 1, 1, cur, out);
    return out;
}

std::vector<Partition> enumerate_monotone(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("enumerate_monotone: negative index");
    std::vector<Partition> out;
    std::vector<int> cur;
    compositions(n + 1, k + 1, 0, cur, out);
    return out;
}

namespace {

/* Locate the entry of mu* holding the (i+1)-th unit: mu* = (x, d, y) with
   |x| < i+1 <= |x|+d and d > 0. Returns the index of d. */
std::size_t segment_index(const Partition& mu, int i) {
    int acc = 0;
    for (std::size_t j = 0; j < mu.entries.size(); ++j) {
        if (mu.entries[j] == 0) continue;
        if (acc < i + 1 && i + 1 <= acc + mu.entries[j]) return j;
        acc += mu.entries[j];
    }
    throw std::out_of_range("composition index out of range");
}

}  // namespace

Partition compose_degeneracy(const Partition& mu, int i) {
    int n = mu.n() + 1;  // result is a map from [n]
    if (i < 0 || i > n - 1) throw std::out_of_range("compose_degeneracy: i out of range");
    Partition out = mu;
    out.entries[segment_index(mu, i)] += 1;
    return out;
}

Partition compose_face(const Partition& mu, int i) {
    int n = mu.n();
    if (i < 0 || i > n) throw std::out_of_range("compose_face: i out of range");
    Partition out = mu;
    out.entries[segment_index(mu, i)] -= 1;
    return out;
}

std::pair<int, Partition> factor_nonsurjective(const Partition& nu) {
    int zeros = nu.zero_count();
    if (zeros == 0) throw std::invalid_argument("factor_nonsurjective: partition is proper");
    if (zeros > 1) throw std::invalid_argument("factor_nonsurjective: more than one zero entry");
    auto it = std::find(nu.entries.begin(), nu.entries.end(), 0);
    int j = static_cast<int>(it - nu.entries.begin());
    Partition hat = nu;
    hat.entries.erase(hat.entries.begin() + j);
    return {j, hat};
}

std::int64_t surjection_ordinal(const Partition& mu) {
    if (!mu.proper()) throw std::invalid_argument("surjection_ordinal: improper partition");
    int n = mu.n(), k = mu.k();
    // count proper compositions lexicographically below mu*
    std::int64_t rank = 1;
    int remaining = n + 1;
    for (int j = 0; j < k; ++j) {
        for (int v = 1; v < mu.entries[j]; ++v)
            rank += binomial(remaining - v - 1, k - j - 1);
        remaining -= mu.entries[j];
    }
    return rank;
}

Partition surjection_at(int n, int k, std::int64_t ordinal) {
    if (ordinal < 1 || ordinal > binomial(n, k))
        throw std::out_of_range("surjection_at: ordinal out of range");
    std::vector<int> e(k + 1);
    int remaining = n + 1;
    std::int64_t left = ordinal - 1;
    for (int j = 0; j < k; ++j) {
        int v = 1;
        for (;; ++v) {
            std::int64_t block = binomial(remaining - v - 1, k - j - 1);
            if (left < block) break;
            left -= block;
        }
        e[j] = v;
        remaining -= v;
    }
    e[k] = remaining;
    return Partition(e);
}

namespace {

bool has_prefix_sum(const Partition& mu, int target) {
    int acc = 0;
    for (int v : mu.entries) {
        acc += v;
        if (acc == target) return true;
        if (acc > target) return false;
    }
    return false;
}

void check_ski_range(int n, int k, int i) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("S-set: bad (n,k)");
    if (i < 0 || i > n) throw std::out_of_range("S-set: i out of range");
}

}  // namespace

std::vector<std::int64_t> s_set(int n, int k, int i) {
    check_ski_range(n, k, i);
    std::vector<std::int64_t> out;
    auto sur = enumerate_surjections(n, k);
    for (std::size_t m = 0; m < sur.size(); ++m)
        if (has_prefix_sum(sur[m], i + 1)) out.push_back(static_cast<std::int64_t>(m) + 1);
    return out;
}

std::vector<std::int64_t> s_set_complement(int n, int k, int i) {
    check_ski_range(n, k, i);
    std::vector<std::int64_t> out;
    auto sur = enumerate_surjections(n, k);
    for (std::size_t m = 0; m < sur.size(); ++m)
        if (!has_prefix_sum(sur[m], i + 1)) out.push_back(static_cast<std::int64_t>(m) + 1);
    return out;
}

std::vector<std::int64_t> s_tilde_set(int n, int k, int i) {
    check_ski_range(n, k, i);
    std::vector<std::int64_t> out;
    auto sur = enumerate_surjections(n, k);
    for (std::size_t m = 0; m < sur.size(); ++m) {
        const auto& e = sur[m].entries;
        int acc = 0;
        bool hit = false;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (acc == i && e[j] == 1) { hit = true; break; }
            acc += e[j];
            if (acc > i) break;
        }
        if (hit) out.push_back(static_cast<std::int64_t>(m) + 1);
    }
    return out;
}

std::vector<int> triangle(const Partition& mu) {
    if (!mu.proper()) throw std::invalid_argument("triangle: improper partition");
    std::vector<int> out;
    int acc = 0;
    for (int j = 0; j < mu.k(); ++j) {
        acc += mu.entries[j];
        out.push_back(acc - 1);
    }
    return out;
}

Partition triangle_inverse(int n, const std::vector<int>& subset) {
    std::vector<int> t = subset;
    std::sort(t.begin(), t.end());
    if (!t.empty() && (t.front() < 0 || t.back() > n - 1))
        throw std::invalid_argument("triangle_inverse: element out of range");
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::invalid_argument("triangle_inverse: repeated element");
    std::vector<int> e;
    int prev = -1;
    for (int v : t) {
        e.push_back(v - prev);
        prev = v;
    }
    e.push_back(n - prev);
    return Partition(e);
}

}  // namespace dp
