#ifndef NLGAUGE_IO_HPP
#define NLGAUGE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nlgauge/coeffs.hpp"
#include "nlgauge/field.hpp"

namespace nlg {

/// Coefficient files are JSON objects keyed by field name ("nu1", "nu2",
/// "nu6", "mu1".."mu12"); missing keys default to zero. Unknown keys are
/// rejected to catch nu/mu index confusion early.
CoefficientVector coeffs_from_json(const std::string& text);
std::string coeffs_to_json(const CoefficientVector& c);
CoefficientVector load_coeffs(const std::string& path);
void save_coeffs(const CoefficientVector& c, const std::string& path);

/// Gauge files: {"gamma": ..., "lambda": ..., "eta": ...}.
GaugeParams gauge_from_json(const std::string& text);
std::string gauge_to_json(const GaugeParams& g);
GaugeParams load_gauge(const std::string& path);

std::string invariants_to_json(const InvariantVector& t);
std::string classification_to_json(const ClassificationReport& r);

/// Field CSV: header then one row per node with columns x[,y], re(psi),
/// im(psi), plus any named derived columns. 17 significant digits.
void write_field_csv(std::ostream& os, const WaveField& psi,
                     const std::vector<std::string>& extra_names = {},
                     const std::vector<const RealField*>& extra = {});
void save_field_csv(const WaveField& psi, const std::string& path);
WaveField read_field_csv(std::istream& is);
WaveField load_field_csv(const std::string& path);

/// One diagnostics record as a JSON line (time, norm, continuity
/// residual, max amplitude).
std::string diagnostics_json_line(double time, double total_probability,
                                  double continuity_residual,
                                  double max_amplitude);

} // namespace nlg

#endif
