#include "pwkt/solver.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

namespace pwkt {

SubspaceQ annihilator(const CurvatureTable& c) {
    const CartanComponent& cc = cartan_component_of(c.problem);
    SubspaceQ s = SubspaceQ::full(cc.dim);
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) s = intersect(s, kernel(c(i, j)));
    return s;
}

SolutionSpace solution_space(Problem problem, const Params& p) {
    const PhiFamily fam = phi_family(problem, p);
    const CurvatureTable curv = curvature(fam);

    SolutionSpace out;
    out.problem = problem;
    out.params = fam.params;
    SubspaceQ s = annihilator(curv);
    out.annihilator_dim = s.dim();

    const std::vector<MatrixQ> maps(fam.phi.begin() + 1, fam.phi.end());
    const int bound = s.ambient_dim();
    for (;;) {
        if (out.iterations > bound)
            throw ConsistencyError("solution_space: refinement failed to terminate");
        ++out.iterations;
        SubspaceQ next = refine(maps, s);
        if (next == s) break;
        s = std::move(next);
    }
    out.space = std::move(s);
    return out;
}

std::vector<ScanPoint> scan(Problem problem, const std::vector<Params>& grid, int jobs,
                            std::size_t limit) {
    if (grid.size() > limit)
        throw std::invalid_argument("scan: grid has " + std::to_string(grid.size()) +
                                    " points, limit is " + std::to_string(limit));
    std::vector<ScanPoint> out(grid.size());
    if (grid.empty()) return out;

    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > grid.size()) workers = static_cast<unsigned>(grid.size());

    std::atomic<std::size_t> cursor{0};
    auto run = [&]() {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= grid.size()) return;
            out[idx].params = grid[idx];
            out[idx].dim = solution_space(problem, grid[idx]).space.dim();
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < out.size(); ++i) {
        int neighbor_min = -1;
        if (i > 0) neighbor_min = out[i - 1].dim;
        if (i + 1 < out.size())
            neighbor_min = neighbor_min < 0 ? out[i + 1].dim : std::min(neighbor_min, out[i + 1].dim);
        out[i].flagged = neighbor_min >= 0 && out[i].dim > neighbor_min;
    }
    return out;
}

const std::vector<CatalogEntry>& special_locus_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        const Problem conf = Problem::conformal;
        const Problem proj = Problem::projective;
        auto r = [](long n, long d = 1) { return Rational(n, d); };
        std::vector<CatalogEntry> c;
        // Conformal Killing tensors (theorem "CKT" cases plus controls).
        c.push_back({"CKT-Thm1.1(1a)", conf, Params(0, r(8, 3), r(2, 3), r(0)), 36, 9});
        c.push_back({"CKT-Thm1.1(1b)", conf, Params(0, r(-8, 3), r(-2, 3), r(0)), 36, 9});
        c.push_back({"CKT-Thm1.1(2)", conf, Params(0, r(-1), r(3), r(1)), 29, 2});
        c.push_back({"CKT-generic", conf, Params(0, r(1), r(2), r(1)), 27, 0});
        c.push_back({"CKT-flat", conf, Params(0, r(1), r(1), r(0)), 84, 0});
        // Killing tensors, conformally flat waves (a1 = a2).
        c.push_back({"KT-Thm1.2(1a)", proj, Params(0, r(1), r(1), r(0)), 28, 1});
        c.push_back({"KT-Thm1.2(1b)", proj, Params(0, r(-1), r(-1), r(0)), 28, 1});
        c.push_back({"KT-Thm1.2(1c)", proj, Params(1, r(3, 4), r(3, 4), r(0)), 29, 1});
        c.push_back({"KT-Thm1.2(2)", proj, Params(1, r(-3, 16), r(-3, 16), r(0)), 34, 6});
        // Killing tensors, conformally non-flat waves.  One-parameter families
        // use the documented representative a2 = 1.
        c.push_back({"KT-Thm1.3(1a)", proj, Params(0, r(1), r(2), r(1)), 22, 1});
        c.push_back({"KT-Thm1.3(1b)", proj, Params(1, r(0), r(1), r(0)), 23, 1});
        c.push_back({"KT-Thm1.3(1c)", proj, Params(1, r(19, 4), r(1), r(0)), 23, 1});
        c.push_back({"KT-Thm1.3(2a)", proj, Params(0, r(0), r(2), r(0)), 23, 2});
        c.push_back({"KT-Thm1.3(2b)", proj, Params(0, r(0), r(-2), r(0)), 23, 2});
        c.push_back({"KT-Thm1.3(2c)", proj, Params(0, r(8, 3), r(2, 3), r(0)), 23, 2});
        c.push_back({"KT-Thm1.3(2d)", proj, Params(0, r(-8, 3), r(-2, 3), r(0)), 23, 2});
        c.push_back({"KT-Thm1.3(3)", proj, Params(1, r(0), r(3, 4), r(0)), 27, 5});
        c.push_back({"KT-Thm1.3(4)", proj, Params(1, r(0), r(-3, 16), r(0)), 28, 6});
        c.push_back({"KT-generic-eps1", proj, Params(1, r(1), r(2), r(1)), 22, 0});
        c.push_back({"KT-flat", proj, Params(0, r(0), r(0), r(0)), 50, 0});
        c.push_back({"KT-flat-eps1", proj, Params(1, r(0), r(0), r(0)), 50, 0});
        return c;
    }();
    return catalog;
}

const CatalogEntry& catalog_entry(const std::string& label) {
    for (const CatalogEntry& e : special_locus_catalog())
        if (e.label == label) return e;
    std::string known;
    for (const CatalogEntry& e : special_locus_catalog()) {
        if (!known.empty()) known += ", ";
        known += e.label;
    }
    throw std::invalid_argument("unknown catalog label; known labels: " + known);
}

}  // namespace pwkt
