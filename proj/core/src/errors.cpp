#include "zitter/errors.hpp"

#include <sstream>

namespace zitter {
namespace {

std::string format_pair(double u, double v) {
    std::ostringstream os;
    os.precision(17);
    os << "indeterminate composition: observer u = " << u << " and particle v = " << v
       << " move at light speed in opposite directions (normaliser is zero)";
    return os.str();
}

std::string with_value(const char* prefix, double x) {
    std::ostringstream os;
    os.precision(17);
    os << prefix << x;
    return os.str();
}

} // namespace

IndeterminateComposition::IndeterminateComposition(double u, double v)
    : Error(format_pair(u, v)), u_(u), v_(v) {}

LightSpeedRapidity::LightSpeedRapidity(double beta)
    : Error(with_value("rapidity is infinite at light speed, beta = ", beta)) {}

LightSpeedSingularity::LightSpeedSingularity(double beta)
    : Error(with_value("gamma and 1+z diverge at light speed, beta = ", beta)) {}

NonPositiveMass::NonPositiveMass(double mass_kg)
    : Error(with_value("mass must be positive and finite, got ", mass_kg)) {}

UnknownParticle::UnknownParticle(const std::string& name)
    : Error("unknown particle '" + name + "'") {}

} // namespace zitter
