#include "honourable.hpp"

#include <algorithm>
#include <set>

#include "ints.hpp"

namespace dp {

int family_set_compare(const SetP& a, const SetP& b) {
    if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
    if (a < b) return -1;
    return a == b ? 0 : 1;
}

int family_compare(const TriangleFamily& a, const TriangleFamily& b) {
    std::size_t m = std::min(a.sets.size(), b.sets.size());
    for (std::size_t j = 0; j < m; ++j) {
        int c = family_set_compare(a.sets[j], b.sets[j]);
        if (c != 0) return c;
    }
    if (a.sets.size() != b.sets.size()) return a.sets.size() < b.sets.size() ? -1 : 1;
    return 0;
}

namespace {

void check_family(const TriangleFamily& t) {
    for (const SetP& x : t.sets) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] < 0 || x[j] >= t.n) throw validation_error("family: element out of range");
            if (j > 0 && x[j] <= x[j - 1]) throw validation_error("family: set not sorted");
        }
    }
    for (std::size_t r = 1; r < t.sets.size(); ++r)
        if (family_set_compare(t.sets[r - 1], t.sets[r]) >= 0)
            throw validation_error("family: sets not strictly increasing");
}

}  // namespace

bool is_honourable(const TriangleFamily& t) {
    std::vector<bool> hit(static_cast<std::size_t>(t.n), false);
    for (const SetP& x : t.sets)
        for (int i : x) hit[static_cast<std::size_t>(i)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

SuperfluousScan find_superfluous(const TriangleFamily& t) {
    check_family(t);
    SuperfluousScan scan;
    std::size_t m = t.sets.size();
    scan.underlined.resize(m);
    for (std::size_t r = 0; r < m; ++r)
        scan.underlined[r].assign(t.sets[r].size(), false);

    for (std::size_t r = 0; r < m; ++r)
        if (t.sets[r].empty()) {
            scan.superfluous_index = static_cast<int>(r);
            return scan;
        }

    std::vector<bool> seen(static_cast<std::size_t>(t.n), false);
    auto fully = [&](std::size_t r) {
        return std::all_of(scan.underlined[r].begin(), scan.underlined[r].end(),
                           [](bool b) { return b; });
    };
    for (std::size_t r = 1; r < m; ++r) {
        for (int i : t.sets[r - 1]) seen[static_cast<std::size_t>(i)] = true;
        for (int i : t.sets[r]) {
            if (!seen[static_cast<std::size_t>(i)]) continue;
            for (std::size_t q = 0; q <= r; ++q)
                for (std::size_t j = 0; j < t.sets[q].size(); ++j)
                    if (t.sets[q][j] == i) scan.underlined[q][j] = true;
            for (std::size_t q = 0; q <= r; ++q)
                if (fully(q)) {
                    scan.superfluous_index = static_cast<int>(q);
                    return scan;
                }
        }
    }
    return scan;
}

namespace {

// Next non-empty subset of {0..n-1} after x in the powerset order, or
// nullopt. Same cardinality advances lexicographically; exhausted
// cardinality c steps down to {0,...,c-2}.
std::optional<SetP> next_set(int n, const SetP& x) {
    int c = static_cast<int>(x.size());
    SetP y = x;
    for (int j = c - 1; j >= 0; --j) {
        if (y[static_cast<std::size_t>(j)] < n - (c - j)) {
            ++y[static_cast<std::size_t>(j)];
            for (int q = j + 1; q < c; ++q)
                y[static_cast<std::size_t>(q)] = y[static_cast<std::size_t>(q - 1)] + 1;
            return y;
        }
    }
    if (c <= 1) return std::nullopt;
    SetP z(static_cast<std::size_t>(c - 1));
    for (int j = 0; j < c - 1; ++j) z[static_cast<std::size_t>(j)] = j;
    return z;
}

bool superfluous_free(const TriangleFamily& t) { return find_superfluous(t).superfluous_index < 0; }

}  // namespace

std::vector<EnumEntry> enumerate_families(int n, const SetP& start) {
    if (n < 1) throw validation_error("enumerate_families: n must be >= 1");
    TriangleFamily t;
    t.n = n;
    t.sets = {start};
    check_family(t);
    if (start.empty()) throw validation_error("enumerate_families: start must be non-empty");

    SetP last{n - 1};
    std::vector<EnumEntry> out;
    for (;;) {
        EnumEntry e;
        e.family = t;
        e.honourable = is_honourable(t);
        e.underlined = find_superfluous(t).underlined;
        out.push_back(e);
        if (t.sets.size() == 1 && t.sets[0] == last) break;

        bool advanced = false;
        if (!e.honourable) {
            // minimal extension above the current maximum
            for (auto y = next_set(n, t.sets.back()); y; y = next_set(n, *y)) {
                TriangleFamily cand = t;
                cand.sets.push_back(*y);
                if (superfluous_free(cand)) {
                    t = cand;
                    advanced = true;
                    break;
                }
            }
        }
        if (!advanced) {
            // backtrack: replace x_s for the largest workable s
            for (int s = static_cast<int>(t.sets.size()); s >= 1 && !advanced; --s) {
                TriangleFamily cand;
                cand.n = n;
                cand.sets.assign(t.sets.begin(), t.sets.begin() + (s - 1));
                for (auto y = next_set(n, t.sets[static_cast<std::size_t>(s - 1)]); y;
                     y = next_set(n, *y)) {
                    cand.sets.push_back(*y);
                    if (superfluous_free(cand)) {
                        t = cand;
                        advanced = true;
                        break;
                    }
                    cand.sets.pop_back();
                }
            }
        }
        if (!advanced) break;  // nothing above start remains
    }
    return out;
}

std::vector<TriangleFamily> enumerate_minimal_honourable(int n, const SetP& start) {
    std::vector<TriangleFamily> out;
    for (const EnumEntry& e : enumerate_families(n, start))
        if (e.honourable) out.push_back(e.family);
    return out;
}

std::vector<TriangleFamily> complete_with_nonminimal(const std::vector<TriangleFamily>& minimal,
                                                     int n, int max_sets, int max_card) {
    if (max_sets < 1 || max_card < 1)
        throw validation_error("complete_with_nonminimal: bounds must be >= 1");

    // every subset of {0..n-1} with cardinality <= max_card, plus the
    // empty set, in powerset order
    std::vector<SetP> eligible;
    for (int c = std::min(max_card, n); c >= 1; --c) {
        SetP x(static_cast<std::size_t>(c));
        for (int j = 0; j < c; ++j) x[static_cast<std::size_t>(j)] = j;
        for (;;) {
            eligible.push_back(x);
            auto y = next_set(n, x);
            if (!y || static_cast<int>(y->size()) < c) break;
            x = *y;
        }
    }
    eligible.push_back(SetP{});

    auto family_less = [](const TriangleFamily& a, const TriangleFamily& b) {
        return family_compare(a, b) < 0;
    };
    std::set<TriangleFamily, decltype(family_less)> families(family_less);

    for (const TriangleFamily& m : minimal) {
        if (static_cast<int>(m.sets.size()) > max_sets) continue;
        if (std::any_of(m.sets.begin(), m.sets.end(), [&](const SetP& x) {
                return static_cast<int>(x.size()) > max_card;
            }))
            continue;
        std::vector<SetP> extras;
        for (const SetP& x : eligible)
            if (std::find(m.sets.begin(), m.sets.end(), x) == m.sets.end()) extras.push_back(x);
        int room = max_sets - static_cast<int>(m.sets.size());

        std::vector<std::size_t> chosen;
        auto emit = [&]() {
            TriangleFamily f;
            f.n = n;
            f.sets = m.sets;
            for (std::size_t idx : chosen) f.sets.push_back(extras[idx]);
            std::sort(f.sets.begin(), f.sets.end(),
                      [](const SetP& a, const SetP& b) { return family_set_compare(a, b) < 0; });
            families.insert(f);
        };
        auto rec = [&](auto&& self, std::size_t from) -> void {
            emit();
            if (static_cast<int>(chosen.size()) == room) return;
            for (std::size_t j = from; j < extras.size(); ++j) {
                chosen.push_back(j);
                self(self, j + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
    }
    return {families.begin(), families.end()};
}

std::optional<TriangleFamily> honourable_existence(int n, const std::vector<std::int64_t>& a) {
    if (static_cast<int>(a.size()) != n + 1)
        throw validation_error("honourable_existence: need n+1 multiplicities");
    Int total = 0;
    for (int k = 0; k <= n; ++k) {
        if (a[static_cast<std::size_t>(k)] < 0)
            throw validation_error("honourable_existence: negative multiplicity");
        if (a[static_cast<std::size_t>(k)] > binomial(n, k))
            throw validation_error("honourable_existence: multiplicity exceeds binomial(n,k)");
        total += Int(k) * a[static_cast<std::size_t>(k)];
    }
    if (total < n) return std::nullopt;

    TriangleFamily t;
    t.n = n;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    int next_uncovered = 0;
    auto advance = [&]() {
        while (next_uncovered < n && covered[static_cast<std::size_t>(next_uncovered)])
            ++next_uncovered;
    };
    for (int k = n; k >= 0; --k) {
        std::set<SetP> used;
        for (std::int64_t copy = 0; copy < a[static_cast<std::size_t>(k)]; ++copy) {
            SetP x;
            advance();
            for (int j = next_uncovered; j < n && static_cast<int>(x.size()) < k; ++j)
                if (!covered[static_cast<std::size_t>(j)]) x.push_back(j);
            for (int j = 0; j < n && static_cast<int>(x.size()) < k; ++j)
                if (std::find(x.begin(), x.end(), j) == x.end()) x.push_back(j);
            std::sort(x.begin(), x.end());
            if (used.count(x)) {
                // fall back to the first unused k-subset
                SetP y(static_cast<std::size_t>(k));
                for (int j = 0; j < k; ++j) y[static_cast<std::size_t>(j)] = j;
                while (used.count(y)) {
                    auto z = next_set(n, y);
                    if (!z || static_cast<int>(z->size()) != k)
                        throw consistency_error("honourable_existence: ran out of subsets");
                    y = *z;
                }
                x = y;
            }
            used.insert(x);
            for (int i : x) covered[static_cast<std::size_t>(i)] = true;
            t.sets.push_back(x);
        }
    }
    std::sort(t.sets.begin(), t.sets.end(),
              [](const SetP& a_, const SetP& b_) { return family_set_compare(a_, b_) < 0; });
    if (!is_honourable(t)) throw consistency_error("honourable_existence: witness does not cover");
    return t;
}

std::string family_str(const TriangleFamily& t, const std::vector<std::vector<bool>>* underlined) {
    std::string s = "{";
    for (std::size_t r = 0; r < t.sets.size(); ++r) {
        if (r) s += ",";
        s += "{";
        for (std::size_t j = 0; j < t.sets[r].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(t.sets[r][j]);
            if (underlined && r < underlined->size() && j < (*underlined)[r].size() &&
                (*underlined)[r][j])
                s += "_";
        }
        s += "}";
    }
    s += "}";
    return s;
}

}  // namespace dp
