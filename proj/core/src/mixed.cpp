#include "qpoker/mixed.hpp"

namespace qp {

template nash_report<rational> analyze_profile(const strategic_game&,
                                               const std::vector<std::vector<rational>>&);
template nash_report<double> analyze_profile(const real_game&,
                                             const std::vector<std::vector<double>>&);

}  // namespace qp
