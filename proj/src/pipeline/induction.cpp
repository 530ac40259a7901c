#include "scc/pipeline/induction.hpp"

#include <deque>
#include <numeric>

#include "scc/exact/errors.hpp"
#include "scc/exact/numtheory.hpp"
#include "scc/exact/serialize.hpp"

namespace scc {

Representation Representation::from_so3(const SO3Rep& R) {
    Representation r;
    r.genus = R.genus();
    r.marker = "so3:p=" + std::to_string(R.level());
    for (int k = 0; k < 2 * r.genus; ++k) {
        r.gens.push_back(R.push(k));
        r.inv.push_back(R.push_inverse(k));
    }
    return r;
}

ExactMatrix Representation::image(const Word& w) const {
    ExactMatrix M = ExactMatrix::identity(dim(), order());
    for (int l : w) M = M * (l > 0 ? gens[gen_of(l)] : inv[gen_of(l)]);
    return M;
}

nlohmann::json Representation::to_json() const {
    nlohmann::json g = nlohmann::json::object();
    for (int k = 0; k < 2 * genus; ++k) g[format_word({letter(k, 1)})] = scc::to_json(gens[k]);
    return {{"genus", genus}, {"marker", marker}, {"dim", dim()}, {"generators", g}};
}

std::vector<Word> schreier_transversal(const CosetTable& t) {
    std::vector<Word> tr(t.degree);
    std::vector<bool> seen(t.degree, false);
    seen[0] = true;
    std::deque<int> q{0};
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        for (int k = 0; k < 2 * t.genus; ++k)
            for (int sign : {1, -1}) {
                int l = letter(k, sign);
                int d = t.act(s, {l});
                if (seen[d]) continue;
                seen[d] = true;
                tr[d] = tr[s];
                tr[d].push_back(l);
                q.push_back(d);
            }
    }
    return tr;
}

SubgroupRep restrict_to(const Representation& rho, const CosetTable& t) {
    if (rho.genus != t.genus) throw PreconditionError("restrict_to: genus mismatch");
    SubgroupRep V;
    V.table = t;
    V.dim = rho.dim();
    V.order = rho.order();
    V.marker = rho.marker;
    V.eval = [rho, t](const Word& w) {
        if (!t.contains(w)) throw PreconditionError("restricted representation evaluated outside the subgroup");
        return rho.image(w);
    };
    return V;
}

namespace {

// block matrix of w acting on the given sheets: block (i, i.w) = V(t_i w t_{i.w}^-1)
ExactMatrix sheet_blocks(const SubgroupRep& V, const CosetTable& t, const std::vector<Word>& tr,
                         const std::vector<int>& sheets, const Word& w) {
    const int m = static_cast<int>(sheets.size()), d = V.dim;
    std::vector<int> pos(t.degree, -1);
    for (int i = 0; i < m; ++i) pos[sheets[i]] = i;
    ExactMatrix M(m * d, V.order);
    for (int i = 0; i < m; ++i) {
        int j = t.act(sheets[i], w);
        if (pos[j] < 0) throw PreconditionError("induction: word leaves the sheet set");
        ExactMatrix B = V.eval(free_reduce(concat({tr[sheets[i]], w, inverse(tr[j])})));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) M(i * d + r, pos[j] * d + c) = B(r, c);
    }
    return M;
}

}  // namespace

Representation induce(const SubgroupRep& V) {
    const CosetTable& t = V.table;
    auto tr = schreier_transversal(t);
    std::vector<int> all(t.degree);
    std::iota(all.begin(), all.end(), 0);
    Representation r;
    r.genus = t.genus;
    r.marker = "ind[" + std::to_string(t.degree) + "]:" + V.marker;
    for (int k = 0; k < 2 * t.genus; ++k) {
        r.gens.push_back(sheet_blocks(V, t, tr, all, {letter(k, 1)}));
        r.inv.push_back(sheet_blocks(V, t, tr, all, {letter(k, -1)}));
    }
    return r;
}

Representation induce(const Representation& rho, const CosetTable& t) {
    if (t.degree == 1) return rho;
    return induce(restrict_to(rho, t));
}

SubgroupRep induce_to(const SubgroupRep& V, const CosetTable& coarse) {
    const CosetTable& fine = V.table;
    auto phi = refinement_map(fine, coarse);
    if (!phi) throw PreconditionError("induce_to: subgroup is not contained in the target");
    std::vector<int> sheets;
    for (int i = 0; i < fine.degree; ++i)
        if ((*phi)[i] == 0) sheets.push_back(i);
    auto tr = schreier_transversal(fine);
    SubgroupRep out;
    out.table = coarse;
    out.dim = V.dim * static_cast<int>(sheets.size());
    out.order = V.order;
    out.marker = "ind[" + std::to_string(sheets.size()) + "]:" + V.marker;
    out.eval = [V, fine, tr, sheets, coarse](const Word& w) {
        if (!coarse.contains(w)) throw PreconditionError("induced representation evaluated outside the subgroup");
        return sheet_blocks(V, fine, tr, sheets, w);
    };
    return out;
}

Representation direct_sum(const std::vector<Representation>& reps) {
    if (reps.empty()) throw PreconditionError("direct_sum: empty list");
    if (reps.size() == 1) return reps[0];
    Representation r;
    r.genus = reps[0].genus;
    long n = 1;
    r.marker = "sum(";
    for (size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].genus != r.genus) throw PreconditionError("direct_sum: representations of different groups");
        n = nt::lcm(n, reps[i].order());
        r.marker += (i ? "," : "") + reps[i].marker;
    }
    r.marker += ")";
    for (int k = 0; k < 2 * r.genus; ++k) {
        std::vector<ExactMatrix> g, v;
        for (const auto& x : reps) {
            g.push_back(x.gens[k].embed(n));
            v.push_back(x.inv[k].embed(n));
        }
        r.gens.push_back(block_diagonal(g));
        r.inv.push_back(block_diagonal(v));
    }
    return r;
}

Cyclotomic frobenius_character(const SubgroupRep& V, const Word& w) {
    const CosetTable& t = V.table;
    auto tr = schreier_transversal(t);
    Cyclotomic s(V.order);
    for (int i = 0; i < t.degree; ++i)
        if (t.act(i, w) == i) s += V.eval(free_reduce(concat({tr[i], w, inverse(tr[i])}))).trace();
    return s;
}

}  // namespace scc
