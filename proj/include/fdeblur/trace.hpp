#ifndef FDEBLUR_TRACE_HPP
#define FDEBLUR_TRACE_HPP

#include <vector>

namespace fdeblur {

/// Optional observer for the penalty/decay schedules the solvers actually ran.
/// Values are recorded at the top of the loop body they drive.
struct ScheduleTrace {
    std::vector<double> beta;    // latent outer loop
    std::vector<double> mu1;     // latent inner loop, flattened across outers
    std::vector<double> mu2;     // kernel outer loop
    std::vector<double> mu3;     // kernel inner loop, flattened across outers
    std::vector<double> gamma1;  // value after each pipeline decay step
    std::vector<double> alpha;   // value after each pipeline decay step
};

}  // namespace fdeblur

#endif
