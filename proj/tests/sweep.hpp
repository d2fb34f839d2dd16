#pragma once

// Enumerates every Koszul-Tate configuration with a given half genus and
// boundary-circle count: identity-glued circle count k in 1..n and every
// Moebius pattern on them, with the closed-form case decided directly from
// the pattern.

#include <string>
#include <vector>

#include "oracles.hpp"
#include "realbundles/topology.hpp"

namespace sweep {

enum class Expected { Generic, AllMoebius, AllOrientable };

struct Config {
    rb::SurfaceDecomposition dec;
    std::vector<rb::CircleType> kinds;
    Expected expected;
    int genus;
    std::string name;
};

inline std::vector<Config> configurations(int half_genus, int n) {
    std::vector<Config> out;
    const int g = 2 * half_genus + n - 1;
    for (int k = 1; k <= n; ++k)
        for (unsigned mask = 0; mask < (1U << k); ++mask) {
            Config cfg{{half_genus, n, k}, {}, Expected::Generic, g, ""};
            int moebius = 0;
            std::string bits;
            for (int i = 0; i < k; ++i) {
                const bool m = (mask >> (k - 1 - i)) & 1U;
                moebius += m;
                bits += m ? '1' : '0';
                cfg.kinds.push_back(m ? rb::CircleType::IdentityMoebius : rb::CircleType::IdentityOrientable);
            }
            for (int i = k; i < n; ++i)
                cfg.kinds.push_back(rb::CircleType::Antipodal);
            if (k == n && moebius == n)
                cfg.expected = Expected::AllMoebius;
            else if (moebius == 0)
                cfg.expected = Expected::AllOrientable;
            cfg.name = "h" + std::to_string(half_genus) + "n" + std::to_string(n) + "k" + std::to_string(k) + "w" + bits;
            out.push_back(cfg);
        }
    return out;
}

inline oracle::Poly expected_series(const Config& c, std::size_t n) {
    switch (c.expected) {
    case Expected::Generic: return oracle::generic(c.genus, n);
    case Expected::AllMoebius: return oracle::all_moebius(c.genus, n);
    case Expected::AllOrientable: return oracle::all_orientable(c.genus, n);
    }
    return {};
}

} // namespace sweep
