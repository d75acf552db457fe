#include "magnon/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace magnon {

std::string mode_label(int n, int m) {
    return "p" + std::to_string(n) + "w" + std::to_string(m);
}

std::pair<int, int> parse_mode_label(const std::string& label) {
    const auto w_pos = label.find('w');
    if (label.size() < 4 || label[0] != 'p' || w_pos == std::string::npos || w_pos < 2) {
        throw ValidationError("malformed mode label '" + label + "'");
    }
    const std::string n_str = label.substr(1, w_pos - 1);
    const std::string m_str = label.substr(w_pos + 1);
    if (n_str.empty() || m_str.empty() ||
        n_str.find_first_not_of("0123456789") != std::string::npos ||
        m_str.find_first_not_of("0123456789") != std::string::npos) {
        throw ValidationError("malformed mode label '" + label + "'");
    }
    return {std::stoi(n_str), std::stoi(m_str)};
}

std::vector<CavityMode> enumerate_modes(const FerriteFilm& film, const BiasField& bias, int n_max,
                                        int m_max, Engine engine) {
    if (n_max < 1 || m_max < 1) throw ValidationError("n_max and m_max must be >= 1");

    std::vector<CavityMode> modes;
    modes.reserve(static_cast<std::size_t>(n_max) * m_max);
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 1; m <= m_max; ++m) {
            CavityMode mode;
            mode.n = n;
            mode.m = m;
            mode.k_x = n * M_PI / film.length;
            mode.k_y = m * M_PI / film.width;
            mode.label = mode_label(n, m);
            try {
                switch (engine) {
                    case Engine::Paper:
                        mode.f = solve_mode_frequency(film, bias, mode.k_x, m).f;
                        break;
                    case Engine::DeOracle:
                        mode.f = de_surface_frequency(film, bias, mode.k_x);
                        break;
                    case Engine::DeWidth:
                        mode.f = oblique_surface_frequency(film, bias, mode.k_x, m);
                        break;
                }
            } catch (const NoSolutionInBand&) {
                mode.f = std::numeric_limits<double>::quiet_NaN();
                mode.status = CavityMode::Status::NoSolutionInBand;
            } catch (const NonConvergence&) {
                mode.f = std::numeric_limits<double>::quiet_NaN();
                mode.status = CavityMode::Status::NonConvergence;
            }
            modes.push_back(std::move(mode));
        }
    }

    std::sort(modes.begin(), modes.end(), [](const CavityMode& a, const CavityMode& b) {
        const bool a_ok = a.status == CavityMode::Status::Ok;
        const bool b_ok = b.status == CavityMode::Status::Ok;
        if (a_ok != b_ok) return a_ok;
        if (a_ok && a.f != b.f) return a.f < b.f;
        return std::tie(a.n, a.m) < std::tie(b.n, b.m);
    });
    return modes;
}

std::vector<ModeSpacing> mode_spacing_report(const std::vector<CavityMode>& modes) {
    std::map<int, std::map<int, double>> by_width;  // m -> n -> f
    for (const auto& mode : modes) {
        if (mode.status == CavityMode::Status::Ok) by_width[mode.m][mode.n] = mode.f;
    }

    std::vector<ModeSpacing> report;
    for (const auto& [m, family] : by_width) {
        for (auto it = family.begin(); it != family.end(); ++it) {
            const auto next = family.find(it->first + 1);
            if (next == family.end()) continue;
            ModeSpacing gap;
            gap.m = m;
            gap.n_lo = it->first;
            gap.n_hi = next->first;
            gap.delta_f = next->second - it->second;
            gap.pair_label = mode_label(gap.n_lo, m) + "->" + mode_label(gap.n_hi, m);
            report.push_back(std::move(gap));
        }
    }
    if (report.empty()) {
        throw TooFewModes("mode spacing needs at least two solved consecutive primaries "
                          "sharing a width order");
    }
    return report;
}

}  // namespace magnon
