#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mec/coupling.hpp"
#include "mec/pmf.hpp"

namespace mec::cli {

/// Decimal with 17 significant digits; parsing it back gives the same double.
std::string format_real(double v);

/// Input collection: {"distributions": [[...], ...], "labels": [...]?,
/// "ground_set": [...]?}.
struct Collection {
  std::vector<Pmf> distributions;
  std::vector<std::string> labels;
  std::vector<std::string> ground_set;
};

/// Throws Error{kIo} when unreadable, Error{kParse} naming the 1-based row
/// (and column, when one entry is at fault) on malformed or invalid data.
Collection parse_collection(std::istream& in);
Collection read_collection(const std::filesystem::path& path);

/// Coupling artifact. Labels, cells and provenance are 1-based on disk.
void write_coupling(std::ostream& out, const Coupling& c);
Coupling parse_coupling(std::istream& in);
Coupling read_coupling(const std::filesystem::path& path);

/// Joint table: {"joint": [[...], ...]}, rows index X.
JointTable parse_joint(std::istream& in);
JointTable read_joint(const std::filesystem::path& path);

}  // namespace mec::cli
