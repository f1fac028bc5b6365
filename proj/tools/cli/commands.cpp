#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "cli/io.hpp"
#include "mec/coupling.hpp"
#include "mec/majorization.hpp"
#include "mec/sampler.hpp"

namespace mec::cli {

namespace {

std::string join_reals(std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += format_real(values[i]);
  }
  return s;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

void report_renyi(std::ostream& out, const Options& opt, const char* key,
                  std::span<const double> masses) {
  if (!opt.alpha) return;
  const RenyiOrder order(*opt.alpha);
  out << "renyi_alpha: " << format_real(*opt.alpha) << '\n';
  out << key << ": " << format_real(entropy(masses, order)) << '\n';
}

void print_summary(std::ostream& out, const Coupling& c, const CouplingReport& rep,
                   double seconds) {
  out << "m: " << rep.m << '\n';
  out << "n: " << rep.n << '\n';
  out << "cells: " << c.num_cells() << '\n';
  out << "support: " << rep.support << '\n';
  out << "support_bound: " << rep.support_bound << '\n';
  out << "entropy_bits: " << format_real(rep.entropy) << '\n';
  out << "glb_entropy_bits: " << format_real(rep.glb_entropy) << '\n';
  out << "gap_bits: " << format_real(rep.gap) << '\n';
  out << "gap_bound_bits: " << format_real(rep.gap_bound) << '\n';
  const double tv_bound = c.truncation ? std::ldexp(1.0, -static_cast<int>(*c.truncation)) : 0.0;
  out << "tv_bound: " << format_real(tv_bound) << '\n';
  const double worst =
      rep.marginal_tv.empty() ? 0.0
                              : *std::max_element(rep.marginal_tv.begin(), rep.marginal_tv.end());
  out << "max_marginal_tv: " << format_real(worst) << '\n';
  out << "elapsed_seconds: " << format_real(seconds) << '\n';
}

}  // namespace

int cmd_glb(const std::filesystem::path& input, const Options& opt, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const Collection col = read_collection(input);
    const GlbResult glb = greatest_lower_bound(col.distributions);
    out << "glb: " << join_reals(glb.glb.masses()) << '\n';
    out << "entropy_bits: " << format_real(entropy(glb.glb)) << '\n';
    report_renyi(out, opt, "renyi_entropy_bits", glb.glb.masses());
    bool all = true;
    for (std::size_t i = 0; i < col.distributions.size(); ++i) {
      const bool ok = majorizes(col.distributions[i], glb.glb);
      all = all && ok;
      out << "majorizes_glb[" << i + 1 << "]: " << (ok ? "true" : "false") << '\n';
    }
    return all ? kExitOk : kExitInvariant;
  });
}

int cmd_couple(const std::filesystem::path& input, const Options& opt, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Collection col = read_collection(input);
    CouplingOptions co;
    co.truncation = opt.trunc;
    if (opt.eps) {
      if (!(*opt.eps >= 0.0 && *opt.eps < 1.0)) {
        throw Error(ErrorCode::kBadParameter, "--eps must lie in [0, 1)");
      }
      co.epsilon = *opt.eps;
    }
    const auto start = std::chrono::steady_clock::now();
    const Coupling c = compute_coupling(col.distributions, co);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const CouplingReport rep = verify_coupling(
        c, col.distributions, opt.alpha ? RenyiOrder(*opt.alpha) : RenyiOrder::infinity());

    std::ostream* summary = &out;
    if (opt.out) {
      std::ofstream file(*opt.out);
      if (!file) throw Error(ErrorCode::kIo, "cannot write " + opt.out->string());
      write_coupling(file, c);
      if (!file) throw Error(ErrorCode::kIo, "failed writing " + opt.out->string());
    } else {
      write_coupling(out, c);
      summary = &err;
    }
    print_summary(*summary, c, rep, seconds);
    if (opt.alpha) {
      *summary << "renyi_alpha: " << format_real(*opt.alpha) << '\n';
      *summary << "renyi_entropy_bits: " << format_real(rep.renyi_entropy) << '\n';
      *summary << "renyi_bound_bits: " << format_real(rep.renyi_upper) << '\n';
    }
    return kExitOk;
  });
}

int cmd_sample(const std::filesystem::path& coupling, const Options& opt, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Coupling c = read_coupling(coupling);
    write_samples(out, c, opt.seed, opt.count);
    return kExitOk;
  });
}

int cmd_verify(const std::filesystem::path& coupling, const std::filesystem::path& input,
               const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Coupling c = read_coupling(coupling);
    const Collection col = read_collection(input);
    if (c.num_inputs() != col.distributions.size()) {
      throw Error(ErrorCode::kParse, "coupling has m = " + std::to_string(c.num_inputs()) +
                                         " maps but the input has " +
                                         std::to_string(col.distributions.size()) +
                                         " distributions");
    }
    std::size_t n = 0;
    for (const Pmf& p : col.distributions) n = std::max(n, p.size());
    if (c.n != n) {
      throw Error(ErrorCode::kParse, "coupling has n = " + std::to_string(c.n) +
                                         " but the input has n = " + std::to_string(n));
    }
    const CouplingReport rep = verify_coupling(
        c, col.distributions, opt.alpha ? RenyiOrder(*opt.alpha) : RenyiOrder::infinity());
    auto flag = [](bool ok) { return ok ? "pass" : "FAIL"; };
    for (std::size_t i = 0; i < rep.marginal_tv.size(); ++i) {
      out << "marginal_tv[" << i + 1 << "]: " << format_real(rep.marginal_tv[i]) << '\n';
    }
    out << "tv_tolerance: " << format_real(rep.tv_tolerance) << '\n';
    out << "check marginals: " << flag(rep.marginals_ok) << '\n';
    out << "support: " << rep.support << " / " << rep.support_bound << '\n';
    out << "check support: " << flag(rep.support_ok) << '\n';
    out << "entropy_bits: " << format_real(rep.entropy) << '\n';
    out << "glb_entropy_bits: " << format_real(rep.glb_entropy) << '\n';
    out << "gap_bits: " << format_real(rep.gap) << " / " << format_real(rep.gap_bound) << '\n';
    out << "check entropy: " << flag(rep.entropy_ok) << '\n';
    out << "renyi_alpha: " << format_real(rep.order.alpha()) << '\n';
    out << "renyi_entropy_bits: " << format_real(rep.renyi_entropy) << " / "
        << format_real(rep.renyi_upper) << '\n';
    out << "check renyi: " << flag(rep.renyi_ok) << '\n';
    out << "check majorization: " << flag(rep.majorization_ok) << '\n';
    for (const std::string& f : rep.failures) out << "failure: " << f << '\n';
    out << "result: " << (rep.passed() ? "pass" : "FAIL") << '\n';
    return rep.passed() ? kExitOk : kExitInvariant;
  });
}

int cmd_causal(const std::filesystem::path& joint, const Options& opt, std::ostream& out,
               std::ostream& err) {
  (void)opt;
  return guarded(err, [&] {
    const JointTable table = read_joint(joint);
    const CausalScores s = causal_scores(table);
    JointTable transposed(table.front().size(), std::vector<double>(table.size()));
    for (std::size_t x = 0; x < table.size(); ++x) {
      for (std::size_t y = 0; y < table[x].size(); ++y) transposed[y][x] = table[x][y];
    }
    out << "criterion: H(cause) + H(glb of effect conditionals); each noise term is within 2 "
           "bits of the minimum-entropy criterion\n";
    out << "forward_noise_bits: " << format_real(glb_entropy_score(table)) << '\n';
    out << "forward_score_bits: " << format_real(s.forward) << '\n';
    out << "backward_noise_bits: " << format_real(glb_entropy_score(transposed)) << '\n';
    out << "backward_score_bits: " << format_real(s.backward) << '\n';
    out << "direction: " << (s.direction > 0 ? "X->Y" : s.direction < 0 ? "Y->X" : "tie")
        << '\n';
    return kExitOk;
  });
}

}  // namespace mec::cli
