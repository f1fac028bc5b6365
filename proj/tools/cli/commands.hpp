#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace mec::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitInput = 2;

struct Options {
  std::optional<std::size_t> trunc;
  std::optional<double> eps;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::optional<std::filesystem::path> out;
  /// Extra Rényi order to report next to Shannon entropy.
  std::optional<double> alpha;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code. Library errors never escape.
int cmd_glb(const std::filesystem::path& input, const Options& opt, std::ostream& out,
            std::ostream& err);
int cmd_couple(const std::filesystem::path& input, const Options& opt, std::ostream& out,
               std::ostream& err);
int cmd_sample(const std::filesystem::path& coupling, const Options& opt, std::ostream& out,
               std::ostream& err);
int cmd_verify(const std::filesystem::path& coupling, const std::filesystem::path& input,
               const Options& opt, std::ostream& out, std::ostream& err);
int cmd_causal(const std::filesystem::path& joint, const Options& opt, std::ostream& out,
               std::ostream& err);

}  // namespace mec::cli
