#include "functors.hpp"

#include <algorithm>
#include <stdexcept>

#include "ints.hpp"

namespace dp {

namespace {

// binomial without the 64-bit cap, for monomial counts over larger modules
Int binom_big(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

std::int64_t to_i64(const Int& v, const char* who) {
    if (v > std::numeric_limits<std::int64_t>::max()) throw limit_error(std::string(who) + ": size overflow");
    return v.convert_to<std::int64_t>();
}

}  // namespace

PolynomialFunctor parse_functor(const std::string& spec) {
    auto pos = spec.find(':');
    if (pos == std::string::npos)
        throw validation_error("functor: expected \"family:degree\", got \"" + spec + "\"");
    std::string fam = spec.substr(0, pos);
    Family family;
    if (fam == "sym") family = Family::Sym;
    else if (fam == "ext") family = Family::Ext;
    else if (fam == "tensor") family = Family::Tensor;
    else throw validation_error("functor: unknown family \"" + fam + "\"");
    int degree;
    try {
        std::size_t used = 0;
        degree = std::stoi(spec.substr(pos + 1), &used);
        if (used != spec.size() - pos - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw validation_error("functor: bad degree in \"" + spec + "\"");
    }
    if (degree < 1) throw validation_error("functor: degree must be >= 1");
    return {family, degree};
}

std::string functor_name(const PolynomialFunctor& f) {
    const char* fam = f.family == Family::Sym ? "sym" : f.family == Family::Ext ? "ext" : "tensor";
    return std::string(fam) + ":" + std::to_string(f.degree);
}

std::int64_t functor_rank(const PolynomialFunctor& f, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("functor_rank: negative rank");
    switch (f.family) {
        case Family::Sym: return to_i64(binom_big(m + f.degree - 1, f.degree), "functor_rank");
        case Family::Ext: return to_i64(binom_big(m, f.degree), "functor_rank");
        case Family::Tensor: {
            Int r = 1;
            for (int p = 0; p < f.degree; ++p) r *= m;
            return to_i64(r, "functor_rank");
        }
    }
    return 0;
}

std::vector<std::vector<std::int64_t>> functor_basis(const PolynomialFunctor& f, std::int64_t m) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(f.degree);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == f.degree) {
            out.push_back(cur);
            return;
        }
        std::int64_t lo = 0;
        if (p > 0) {
            if (f.family == Family::Sym) lo = cur[p - 1];
            else if (f.family == Family::Ext) lo = cur[p - 1] + 1;
        }
        for (std::int64_t v = lo; v < m; ++v) {
            cur[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::int64_t monomial_index(const PolynomialFunctor& f, std::int64_t m,
                            const std::vector<std::int64_t>& tuple) {
    int d = f.degree;
    if (static_cast<int>(tuple.size()) != d)
        throw std::invalid_argument("monomial_index: tuple length mismatch");
    if (f.family == Family::Tensor) {
        std::int64_t idx = 0;
        for (int p = 0; p < d; ++p) idx = idx * m + tuple[p];
        return idx;
    }
    // Sym tuples become strictly increasing over m+d-1 after shifting by position.
    std::int64_t mm = (f.family == Family::Sym) ? m + d - 1 : m;
    Int rank = 0;
    std::int64_t prev = -1;
    for (int p = 0; p < d; ++p) {
        std::int64_t t = tuple[p] + (f.family == Family::Sym ? p : 0);
        for (std::int64_t v = prev + 1; v < t; ++v) rank += binom_big(mm - 1 - v, d - 1 - p);
        prev = t;
    }
    return to_i64(rank, "monomial_index");
}

namespace {

constexpr std::int64_t kMaxMatrixEntries = 80'000'000;

void collapse_and_add(const PolynomialFunctor& f, std::int64_t m_tgt,
                      std::vector<std::int64_t>& tgt, const Int& coeff, IntMatrix& out,
                      std::size_t col) {
    switch (f.family) {
        case Family::Tensor:
            out.at(static_cast<std::size_t>(monomial_index(f, m_tgt, tgt)), col) += coeff;
            return;
        case Family::Sym: {
            std::vector<std::int64_t> s = tgt;
            std::sort(s.begin(), s.end());
            out.at(static_cast<std::size_t>(monomial_index(f, m_tgt, s)), col) += coeff;
            return;
        }
        case Family::Ext: {
            std::vector<std::int64_t> s = tgt;
            int inversions = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    if (s[i] == s[j]) return;  // repeated factor
                    if (s[i] > s[j]) ++inversions;
                }
            std::sort(s.begin(), s.end());
            Int signed_coeff = (inversions % 2) ? -coeff : coeff;
            out.at(static_cast<std::size_t>(monomial_index(f, m_tgt, s)), col) += signed_coeff;
            return;
        }
    }
}

}  // namespace

IntMatrix apply_functor_on(const PolynomialFunctor& f, const IntMatrix& g,
                           const std::vector<std::vector<std::int64_t>>& source_tuples) {
    std::int64_t m_tgt = static_cast<std::int64_t>(g.rows());
    std::int64_t rank_tgt = functor_rank(f, m_tgt);
    if (rank_tgt * static_cast<std::int64_t>(source_tuples.size()) > kMaxMatrixEntries)
        throw limit_error("apply_functor: result exceeds the size limit");
    IntMatrix out(static_cast<std::size_t>(rank_tgt), source_tuples.size());

    std::vector<std::int64_t> tgt(f.degree);
    for (std::size_t col = 0; col < source_tuples.size(); ++col) {
        const auto& src = source_tuples[col];
        auto rec = [&](auto&& self, int p, const Int& coeff) -> void {
            if (p == f.degree) {
                collapse_and_add(f, m_tgt, tgt, coeff, out, col);
                return;
            }
            for (std::int64_t t = 0; t < m_tgt; ++t) {
                const Int& e = g.at(static_cast<std::size_t>(t),
                                    static_cast<std::size_t>(src[p]));
                if (e == 0) continue;
                tgt[p] = t;
                self(self, p + 1, coeff * e);
            }
        };
        rec(rec, 0, Int(1));
    }
    return out;
}

IntMatrix apply_functor(const PolynomialFunctor& f, const IntMatrix& g) {
    return apply_functor_on(f, g, functor_basis(f, static_cast<std::int64_t>(g.cols())));
}

IntMatrix deviation(const PolynomialFunctor& f, const std::vector<IntMatrix>& maps) {
    if (maps.empty()) throw std::invalid_argument("deviation: no maps");
    std::size_t rows = maps[0].rows(), cols = maps[0].cols();
    for (const auto& m : maps)
        if (m.rows() != rows || m.cols() != cols)
            throw std::invalid_argument("deviation: maps must be parallel");
    int r = static_cast<int>(maps.size());
    IntMatrix acc(static_cast<std::size_t>(functor_rank(f, static_cast<std::int64_t>(rows))),
                  static_cast<std::size_t>(functor_rank(f, static_cast<std::int64_t>(cols))));
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        IntMatrix sum(rows, cols);
        int bits = 0;
        for (int j = 0; j < r; ++j)
            if (mask & (1u << j)) {
                sum = sum + maps[j];
                ++bits;
            }
        IntMatrix term = apply_functor(f, sum);
        acc = ((r - bits) % 2) ? acc - term : acc + term;
    }
    return acc;
}

namespace {

// r-part compositions of d with all parts >= 1, lexicographic.
std::vector<std::vector<int>> positive_compositions(int d, int r) {
    std::vector<std::vector<int>> out;
    if (r < 1 || r > d) return out;
    std::vector<int> cur(r);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == r - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= left - (r - 1 - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (d >= r) rec(rec, 0, d);
    return out;
}

// surjections {0..d-1} -> {0..r-1} as tuples, lexicographic
std::vector<std::vector<int>> surjective_functions(int d, int r) {
    std::vector<std::vector<int>> out;
    if (r < 1 || r > d) return out;
    std::vector<int> cur(d);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == d) {
            std::vector<bool> hit(r, false);
            for (int v : cur) hit[v] = true;
            if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) out.push_back(cur);
            return;
        }
        for (int v = 0; v < r; ++v) {
            cur[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

CrossEffect cross_effect(const PolynomialFunctor& f, const std::vector<std::int64_t>& slot_ranks,
                         const std::vector<int>& alpha) {
    for (int j : alpha)
        if (j < 0 || j >= static_cast<int>(slot_ranks.size()))
            throw std::invalid_argument("cross_effect: slot out of range");
    if (!std::is_sorted(alpha.begin(), alpha.end(), std::less_equal<int>()))
        throw std::invalid_argument("cross_effect: alpha must be strictly increasing");
    if (alpha.empty()) throw std::invalid_argument("cross_effect: alpha must be non-empty");

    std::vector<std::int64_t> offsets(slot_ranks.size() + 1, 0);
    for (std::size_t j = 0; j < slot_ranks.size(); ++j)
        offsets[j + 1] = offsets[j] + slot_ranks[j];
    std::int64_t ambient = offsets.back();

    CrossEffect ce;
    ce.functor = f;
    ce.alpha = alpha;
    for (int j : alpha) ce.arg_ranks.push_back(slot_ranks[j]);
    int r = static_cast<int>(alpha.size());
    int d = f.degree;

    std::vector<std::vector<std::int64_t>> tuples;
    if (f.family == Family::Tensor) {
        for (const auto& phi : surjective_functions(d, r)) {
            std::vector<std::int64_t> cur(d);
            auto rec = [&](auto&& self, int p) -> void {
                if (p == d) {
                    tuples.push_back(cur);
                    return;
                }
                int slot = alpha[phi[p]];
                for (std::int64_t b = 0; b < slot_ranks[slot]; ++b) {
                    cur[p] = offsets[slot] + b;
                    self(self, p + 1);
                }
            };
            rec(rec, 0);
        }
    } else {
        PolynomialFunctor part{f.family, 1};
        for (const auto& e : positive_compositions(d, r)) {
            // per-slot monomial lists for this multidegree
            std::vector<std::vector<std::vector<std::int64_t>>> slot_bases(r);
            bool empty = false;
            for (int j = 0; j < r; ++j) {
                part.degree = e[j];
                slot_bases[j] = functor_basis(part, slot_ranks[alpha[j]]);
                if (slot_bases[j].empty()) empty = true;
            }
            if (empty) continue;
            std::vector<std::size_t> pick(r, 0);
            for (;;) {
                std::vector<std::int64_t> cur;
                cur.reserve(d);
                for (int j = 0; j < r; ++j)
                    for (std::int64_t v : slot_bases[j][pick[j]])
                        cur.push_back(offsets[alpha[j]] + v);
                tuples.push_back(cur);
                int j = r - 1;
                while (j >= 0 && ++pick[j] == slot_bases[j].size()) pick[j--] = 0;
                if (j < 0) break;
            }
        }
    }

    ce.rank = static_cast<std::int64_t>(tuples.size());
    ce.ambient_indices.reserve(tuples.size());
    for (const auto& t : tuples)
        ce.ambient_indices.push_back(monomial_index(f, ambient, t));
    ce.tuples = std::move(tuples);
    return ce;
}

std::int64_t cross_effect_rank(const PolynomialFunctor& f,
                               const std::vector<std::int64_t>& arg_ranks) {
    std::vector<int> alpha(arg_ranks.size());
    for (std::size_t j = 0; j < arg_ranks.size(); ++j) alpha[j] = static_cast<int>(j);
    if (alpha.empty()) return 0;
    return cross_effect(f, arg_ranks, alpha).rank;
}

std::vector<CrossEffect> decompose(const PolynomialFunctor& f,
                                   const std::vector<std::int64_t>& slot_ranks) {
    int s = static_cast<int>(slot_ranks.size());
    std::vector<CrossEffect> out;
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        std::vector<int> alpha;
        bool zero = false;
        for (int j = 0; j < s; ++j)
            if (mask & (1u << j)) {
                alpha.push_back(j);
                if (slot_ranks[j] == 0) zero = true;
            }
        if (zero || static_cast<int>(alpha.size()) > f.degree) continue;
        out.push_back(cross_effect(f, slot_ranks, alpha));
    }
    return out;
}

IntMatrix embedding_matrix(const CrossEffect& ce, std::int64_t ambient_rank) {
    IntMatrix out(static_cast<std::size_t>(ambient_rank), static_cast<std::size_t>(ce.rank));
    for (std::size_t c = 0; c < ce.ambient_indices.size(); ++c)
        out.at(static_cast<std::size_t>(ce.ambient_indices[c]), c) = 1;
    return out;
}

IntMatrix induced_map(const PolynomialFunctor& f, const IntMatrix& g,
                      const std::vector<std::int64_t>& source_slot_ranks,
                      const std::vector<int>& source_alpha,
                      const std::vector<std::int64_t>& target_slot_ranks,
                      const std::vector<int>& target_alpha) {
    CrossEffect src = cross_effect(f, source_slot_ranks, source_alpha);
    CrossEffect tgt = cross_effect(f, target_slot_ranks, target_alpha);
    IntMatrix cols = apply_functor_on(f, g, src.tuples);
    std::vector<std::size_t> rows(tgt.ambient_indices.begin(), tgt.ambient_indices.end());
    std::vector<std::size_t> all_cols(cols.cols());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
    return cols.slice(rows, all_cols);
}

}  // namespace dp
