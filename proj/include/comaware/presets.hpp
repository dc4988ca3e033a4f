#ifndef COMAWARE_PRESETS_HPP
#define COMAWARE_PRESETS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growth.hpp"
#include "stats.hpp"

namespace comaware {

/// A named experiment: model parameters, the fit lower bound used for its
/// statistics, and (for the two real networks) their observed statistics.
struct Preset {
    std::string name;
    GrowthParams params;
    std::size_t xmin = 5;
    std::optional<NetworkStats> observed;
};

inline std::vector<Preset> all_presets() {
    const std::vector<double> even{0.2, 0.2, 0.2, 0.2, 0.2};
    const std::vector<double> skewed{0.005, 0.055, 0.11, 0.28, 0.55};

    std::vector<Preset> out;
    out.push_back({"karate",
                   {34, 78, {0.24, 0.5, 0.26}, 0.8, 0.22, 0.78, 0.04, 0.14, 0.41, 0.41},
                   2,
                   NetworkStats{0.26, 2.41, 0.38, 5.0, 2.55}});
    out.push_back({"caltech",
                   {769,
                    16656,
                    {0.375, 0.341, 0.254, 0.017, 0.005, 0.004, 0.003, 0.003},
                    0.85,
                    0.333,
                    0.666,
                    0.091,
                    0.182,
                    0.363,
                    0.363},
                   5,
                   NetworkStats{0.29, 2.34, 0.33, 6.0, 1.50}});

    struct Row {
        std::size_t m;
        const std::vector<double>* c;
        double comp, rp_n, pp_n, rp_e, pp_e, c3p_e, c4p_e;
    };
    const Row rows[] = {
        {2000, &even, 0.50, 0.50, 0.50, 0.25, 0.25, 0.25, 0.25},
        {2000, &even, 0.75, 0.33, 0.66, 0.10, 0.20, 0.30, 0.40},
        {2000, &skewed, 0.75, 0.33, 0.66, 0.10, 0.20, 0.30, 0.40},
        {2000, &skewed, 0.25, 0.17, 0.83, 0.12, 0.63, 0.12, 0.12},
        {5000, &even, 0.50, 0.50, 0.50, 0.25, 0.25, 0.25, 0.25},
        {5000, &even, 0.75, 0.33, 0.66, 0.10, 0.20, 0.30, 0.40},
        {5000, &skewed, 0.75, 0.33, 0.66, 0.10, 0.20, 0.30, 0.40},
        {5000, &skewed, 0.25, 0.17, 0.83, 0.12, 0.63, 0.12, 0.12},
    };
    int i = 1;
    for (const auto& r : rows) {
        out.push_back({"exp" + std::to_string(i++),
                       {500, r.m, *r.c, r.comp, r.rp_n, r.pp_n, r.rp_e, r.pp_e, r.c3p_e, r.c4p_e},
                       5,
                       std::nullopt});
    }
    return out;
}

inline std::optional<Preset> find_preset(std::string_view name) {
    for (auto& p : all_presets()) {
        if (p.name == name) {
            return p;
        }
    }
    return std::nullopt;
}

} // namespace comaware

#endif // COMAWARE_PRESETS_HPP
