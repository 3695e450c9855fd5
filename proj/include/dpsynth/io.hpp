#pragma once

#include <string>
#include <vector>

#include "dpsynth/density.hpp"
#include "dpsynth/domain.hpp"

namespace dpsynth {

/// Shortest round-trip-safe decimal form used by every CSV writer, so that
/// identical doubles always serialize to identical bytes.
std::string format_double(double value);

/// Dataset CSV: header x1,...,xp; integer cells on discrete domains, decimals
/// in [0,1] on continuous ones.
void save_dataset_csv(const Dataset& data, const std::string& path);

/// Parses a dataset CSV against the expected domain. Reports the 1-based row
/// and column on malformed or out-of-domain cells.
Dataset load_dataset_csv(const std::string& path, const DomainSpec& domain);

/// Lattice/density CSV: x1,...,xp,weight.
void save_density_csv(const DiscreteDensity& density, int dimension,
                      const std::string& path);

/// Writes a text file, creating parent directories as needed.
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace dpsynth
