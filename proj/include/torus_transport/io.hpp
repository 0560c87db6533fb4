#pragma once

#include <string>
#include <vector>

#include "torus_transport/bounds.hpp"
#include "torus_transport/cdf.hpp"
#include "torus_transport/fit.hpp"
#include "torus_transport/fourier.hpp"
#include "torus_transport/measures.hpp"
#include "torus_transport/ot.hpp"

namespace torus_transport {

/// Shortest round-trip decimal rendering, locale independent.  Every number
/// written to CSV/JSON goes through here so identical runs are byte-identical.
std::string format_double(double v);

std::string to_json(const TorusDensity& d);
std::string to_json(const AtomicMeasure& m);
std::string to_json(const FourierSeries& s);
std::string to_json(const Cdf& c);
std::string to_json(const TransportCost& t);
std::string to_json(const SlopeFit& f);
std::string to_json(const BoundReport& r);

TorusDensity density_from_json(const std::string& text);
AtomicMeasure atoms_from_json(const std::string& text);
FourierSeries series_from_json(const std::string& text);

/// Two-column CSV (location, weight); a header row is optional.
AtomicMeasure atoms_from_csv_text(const std::string& text);
AtomicMeasure atoms_from_csv_file(const std::string& path);
std::string atoms_to_csv(const AtomicMeasure& m);

/// One value per line.
std::vector<double> values_from_csv_text(const std::string& text);
std::vector<double> values_from_csv_file(const std::string& path);

std::string plan_to_csv(const DiscretePlan& plan);

std::string bound_report_to_csv(const BoundReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace torus_transport
