#include "dold_puppe.hpp"

#include <algorithm>
#include <sstream>

#include "gamma.hpp"
#include "ints.hpp"
#include "json.hpp"
#include "partitions.hpp"
#include "smith.hpp"

namespace dp {

std::vector<DPSlot> gamma_slots(const ChainComplex& c, int n) {
    std::vector<DPSlot> slots;
    int top = std::min(n, c.length());
    for (int k = top; k >= 0; --k) {
        std::int64_t copies = binomial(n, k);
        for (std::int64_t ord = 1; ord <= copies; ++ord) slots.push_back({k, ord});
    }
    return slots;
}

std::vector<std::int64_t> gamma_slot_ranks(const ChainComplex& c, int n) {
    std::vector<std::int64_t> ranks;
    for (const DPSlot& s : gamma_slots(c, n)) ranks.push_back(c.rank(s.k));
    return ranks;
}

namespace {

std::string slot_name(const DPSlot& s) {
    std::string name;
    if (s.k < 26) name = std::string(1, static_cast<char>('A' + s.k));
    else name = "M[" + std::to_string(s.k) + "]";
    if (s.k >= 1) name += "_" + std::to_string(s.ordinal);
    return name;
}

std::string family_display(const PolynomialFunctor& f) {
    const char* fam = f.family == Family::Sym ? "Sym" : f.family == Family::Ext ? "Ext" : "Tensor";
    return std::string(fam) + "^" + std::to_string(f.degree);
}

std::string summand_label(const PolynomialFunctor& f, const std::vector<DPSlot>& slots) {
    std::size_t r = slots.size();
    if (f.degree == 1) return slot_name(slots[0]);
    if (r == 1) return family_display(f) + "(" + slot_name(slots[0]) + ")";
    if (static_cast<int>(r) == f.degree && f.family != Family::Tensor) {
        std::string s = slot_name(slots[0]);
        for (std::size_t j = 1; j < r; ++j) s += "⊗" + slot_name(slots[j]);
        return s;
    }
    std::string s = "cr_" + std::to_string(r) + "(" + family_display(f) + ")(";
    for (std::size_t j = 0; j < r; ++j) {
        if (j) s += ",";
        s += slot_name(slots[j]);
    }
    return s + ")";
}

// position of the copy (k, ordinal) in gamma_slots order
std::size_t slot_position(const ChainComplex& c, int n, int k, std::int64_t ordinal) {
    std::int64_t pos = 0;
    int top = std::min(n, c.length());
    for (int kk = top; kk > k; --kk) pos += binomial(n, kk);
    return static_cast<std::size_t>(pos + ordinal - 1);
}

}  // namespace

std::vector<DPSummand> dp_degree(const PolynomialFunctor& f, const ChainComplex& c, int n) {
    if (n < 0) throw validation_error("dp_degree: negative level");
    std::vector<std::int64_t> slot_ranks = gamma_slot_ranks(c, n);
    std::vector<DPSummand> out;

    auto push = [&](TriangleFamily fam) {
        DPSummand s;
        s.family = std::move(fam);
        std::vector<int> alpha;
        for (const SetP& x : s.family.sets) {
            int k = static_cast<int>(x.size());
            Partition mu = triangle_inverse(n, x);
            std::int64_t ord = surjection_ordinal(mu);
            s.slots.push_back({k, ord});
            alpha.push_back(static_cast<int>(slot_position(c, n, k, ord)));
        }
        s.ce = cross_effect(f, slot_ranks, alpha);
        if (s.ce.rank == 0) return;
        s.label = summand_label(f, s.slots);
        out.push_back(std::move(s));
    };

    if (n == 0) {
        TriangleFamily fam;
        fam.n = 0;
        fam.sets = {SetP{}};
        push(std::move(fam));
        return out;
    }

    int top = std::min(n, c.length());
    if (top == 0) return out;  // no set of cardinality <= 0 covers {0..n-1}

    auto minimal = enumerate_minimal_honourable(n, default_start(top));
    for (TriangleFamily& fam : complete_with_nonminimal(minimal, n, f.degree, c.length()))
        push(std::move(fam));
    return out;
}

namespace {

IntMatrix assemble_differential(const PolynomialFunctor& f, const ChainComplex& c, int n,
                                const std::vector<DPSummand>& sources,
                                const std::vector<DPSummand>& targets) {
    std::vector<std::vector<std::int64_t>> source_tuples;
    for (const DPSummand& s : sources)
        source_tuples.insert(source_tuples.end(), s.ce.tuples.begin(), s.ce.tuples.end());
    std::vector<std::size_t> target_rows;
    for (const DPSummand& t : targets)
        for (std::int64_t idx : t.ce.ambient_indices)
            target_rows.push_back(static_cast<std::size_t>(idx));

    IntMatrix delta(target_rows.size(), source_tuples.size());
    std::vector<std::size_t> all_cols(source_tuples.size());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;

    for (int i = 0; i <= n; ++i) {
        IntMatrix g = as_matrix(face_op(c.length(), n, i), c);
        IntMatrix fg = apply_functor_on(f, g, source_tuples);
        IntMatrix block = fg.slice(target_rows, all_cols);
        delta = (i % 2) ? delta - block : delta + block;
    }
    return delta;
}

}  // namespace

IntMatrix dp_differential(const PolynomialFunctor& f, const ChainComplex& c, int n) {
    if (n < 1) throw validation_error("dp_differential: level must be >= 1");
    return assemble_differential(f, c, n, dp_degree(f, c, n), dp_degree(f, c, n - 1));
}

DPComplex build(const PolynomialFunctor& f, const ChainComplex& c) {
    c.validate();
    DPComplex out;
    out.functor = f;
    out.input = c.trimmed();

    int levels = out.input.length() * f.degree;
    for (int n = 0; n <= levels; ++n) {
        DPLevel lv;
        lv.n = n;
        lv.summands = dp_degree(f, out.input, n);
        for (const DPSummand& s : lv.summands) lv.rank += s.ce.rank;
        out.levels.push_back(std::move(lv));
    }
    for (int n = 1; n <= levels; ++n)
        out.differentials.push_back(assemble_differential(
            f, out.input, n, out.levels[static_cast<std::size_t>(n)].summands,
            out.levels[static_cast<std::size_t>(n - 1)].summands));

    for (int n = 2; n <= levels; ++n) {
        const IntMatrix& a = out.differentials[static_cast<std::size_t>(n - 2)];
        const IntMatrix& b = out.differentials[static_cast<std::size_t>(n - 1)];
        if (!(a * b).is_zero())
            throw consistency_error("build: Delta_" + std::to_string(n - 1) + " o Delta_" +
                                    std::to_string(n) + " != 0");
    }
    return out;
}

ChainComplex DPComplex::as_chain_complex() const {
    ChainComplex c;
    for (const DPLevel& lv : levels) c.ranks.push_back(lv.rank);
    c.differentials = differentials;
    return c;
}

std::string DPComplex::summary() const {
    std::ostringstream os;
    os << "functor: " << functor_name(functor) << "\n";
    os << "ranks:";
    for (const DPLevel& lv : levels) os << " " << lv.rank;
    os << "\n";
    for (const DPLevel& lv : levels) {
        os << "degree " << lv.n << ":";
        if (lv.summands.empty()) {
            os << " 0\n";
            continue;
        }
        for (std::size_t j = 0; j < lv.summands.size(); ++j)
            os << (j ? " + " : " ") << lv.summands[j].label;
        os << "\n";
    }
    return os.str();
}

std::string DPComplex::to_json() const {
    nlohmann::json j = nlohmann::json::parse(complex_to_json(as_chain_complex()));
    j["functor"] = functor_name(functor);
    nlohmann::json labels = nlohmann::json::array();
    for (const DPLevel& lv : levels) {
        nlohmann::json level = nlohmann::json::array();
        for (const DPSummand& s : lv.summands) {
            nlohmann::json fam = nlohmann::json::array();
            for (const SetP& x : s.family.sets) fam.push_back(x);
            nlohmann::json slots = nlohmann::json::array();
            for (const DPSlot& sl : s.slots) slots.push_back({{"k", sl.k}, {"ordinal", sl.ordinal}});
            level.push_back({{"family", fam},
                             {"slots", slots},
                             {"rank", s.ce.rank},
                             {"label", s.label}});
        }
        labels.push_back(level);
    }
    j["labels"] = labels;
    return j.dump(2) + "\n";
}

ChainComplex quotient_oracle(const PolynomialFunctor& f, const ChainComplex& c_in, int n_max) {
    c_in.validate();
    ChainComplex c = c_in.trimmed();
    if (n_max < 0) throw validation_error("quotient_oracle: negative level bound");

    constexpr std::int64_t kMaxAmbient = 3000;

    // quotient map and a section of it, per level
    std::vector<IntMatrix> proj, sect;
    ChainComplex out;
    for (int n = 0; n <= n_max; ++n) {
        std::int64_t gr = gamma_rank(c, n);
        std::int64_t ambient = functor_rank(f, gr);
        if (ambient > kMaxAmbient)
            throw limit_error("quotient_oracle: level " + std::to_string(n) + " rank " +
                              std::to_string(ambient) + " exceeds the oracle limit");
        if (n == 0) {
            proj.push_back(IntMatrix::identity(static_cast<std::size_t>(ambient)));
            sect.push_back(IntMatrix::identity(static_cast<std::size_t>(ambient)));
            out.ranks.push_back(ambient);
            continue;
        }
        std::int64_t prev = functor_rank(f, gamma_rank(c, n - 1));
        IntMatrix degen(static_cast<std::size_t>(ambient), 0);
        for (int i = 0; i <= n - 1; ++i) {
            IntMatrix si = as_matrix(degeneracy_op(c.length(), n, i), c);
            degen = degen.hconcat(apply_functor(f, si));
        }
        SmithResult s = smith_normal_form(degen);
        for (const Int& inv : s.invariant_factors)
            if (inv != 1)
                throw consistency_error("quotient_oracle: degenerate part is not a direct summand");
        std::vector<std::size_t> keep;
        for (std::size_t q = s.rank; q < static_cast<std::size_t>(ambient); ++q) keep.push_back(q);
        std::vector<std::size_t> all(static_cast<std::size_t>(ambient));
        for (std::size_t q = 0; q < all.size(); ++q) all[q] = q;
        proj.push_back(s.Uinv.slice(keep, all));  // rows after the image
        sect.push_back(s.U.slice(all, keep));     // matching columns of U
        out.ranks.push_back(ambient - static_cast<std::int64_t>(s.rank));

        IntMatrix alt(static_cast<std::size_t>(prev), static_cast<std::size_t>(ambient));
        for (int i = 0; i <= n; ++i) {
            IntMatrix fg = apply_functor(f, as_matrix(face_op(c.length(), n, i), c));
            alt = (i % 2) ? alt - fg : alt + fg;
        }
        out.differentials.push_back(proj[static_cast<std::size_t>(n - 1)] * alt *
                                    sect[static_cast<std::size_t>(n)]);
    }
    out.validate();
    return out;
}

}  // namespace dp
