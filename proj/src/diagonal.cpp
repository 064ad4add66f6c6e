#include "regain/diagonal.hpp"

#include "regain/pairing.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace regain {

DiagonalRun diagonalize_non_regaining(const InterpreterFamily& fam, std::uint64_t horizon) {
    DiagonalRun run;
    run.horizon = horizon;
    run.codes.reserve(horizon);
    std::unordered_set<std::uint64_t> enumerated;

    for (std::uint64_t t = 0; t < horizon; ++t) {
        auto [ek, _] = unpair(t);
        auto [e, k] = unpair(ek);
        std::uint64_t target = pair(e, k + 1);

        bool ok = true;
        // All of phi_e(0..<e,k+1>) must halt within t steps and be increasing.
        std::uint64_t prev = 0;
        for (std::uint64_t n = 0; n <= target && ok; ++n) {
            auto p = fam.eval_bounded(e, n, t);
            if (!p.halted) ok = false;
            else {
                if (n > 0 && p.value <= prev) ok = false;
                prev = p.value;
            }
        }
        if (ok) {
            auto p = fam.eval_bounded(e, target, t);
            ok = t >= p.value;
        }
        if (ok && enumerated.count(ek)) ok = false;

        if (ok) {
            enumerated.insert(ek);
            run.codes.push_back(ek + 1);
        } else {
            run.codes.push_back(0);
        }
    }
    return run;
}

std::vector<RequirementCheck> check_requirements(const DiagonalRun& run,
                                                 const InterpreterFamily& fam,
                                                 std::uint64_t n_max) {
    // Horizon-stable set: element -> its (unique) enumeration stage.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> elems;
    for (std::uint64_t t = 0; t < run.codes.size(); ++t)
        if (run.codes[t] > 0) elems.emplace_back(run.codes[t] - 1, t);
    std::sort(elems.begin(), elems.end());

    // prefix_best[i]: among the first i elements (by value), the one
    // enumerated latest. R_e at n needs some element < n at stage >= phi_e(n).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> prefix_best(elems.size() + 1,
                                                                     {0, 0});  // (stage, elem)
    for (std::size_t i = 0; i < elems.size(); ++i) {
        prefix_best[i + 1] = prefix_best[i];
        if (i == 0 || elems[i].second >= prefix_best[i].first)
            prefix_best[i + 1] = {elems[i].second, elems[i].first};
    }

    std::vector<RequirementCheck> out;
    for (std::uint64_t e = 0; e < fam.size(); ++e) {
        if (!fam.is_total(e) || !fam.is_increasing_upto(e, n_max)) continue;
        for (std::uint64_t n = pair(e, 0) + 1; n <= n_max; ++n) {
            RequirementCheck rc;
            rc.e = e;
            rc.n = n;
            std::uint64_t bound = *fam.eval(e, n);
            auto it = std::lower_bound(elems.begin(), elems.end(),
                                       std::make_pair(n, std::uint64_t{0}));
            std::size_t cnt = static_cast<std::size_t>(it - elems.begin());
            if (cnt > 0 && prefix_best[cnt].first >= bound) {
                rc.holds = true;
                rc.witness = prefix_best[cnt].second;
            }
            out.push_back(rc);
        }
    }
    return out;
}

}  // namespace regain
