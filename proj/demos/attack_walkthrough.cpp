// Runs one DILR attack against a strong BA network and reports cost and
// concealment.

#include <cstdio>

#include "sfnet/attacks.hpp"
#include "sfnet/generators.hpp"

int main() {
  sfnet::BaConfig ba;
  ba.n = 500;
  ba.m_attach = 2;
  ba.seed = 7;
  const sfnet::Graph g = sfnet::generate_ba(ba);

  sfnet::AttackConfig cfg;
  cfg.seed = 99;
  cfg.log_steps = true;
  try {
    const sfnet::AttackOutcome out = sfnet::attack_until_exit(g, sfnet::Strategy::Dilr, cfg);
    std::printf("exited strong after %zu steps (delta_m = %.2f%%), terminal: %s%s\n", out.steps,
                100.0 * out.delta_m, sfnet::to_string(out.terminal),
                out.aborted ? " [aborted]" : "");
    const auto& c = out.concealment;
    std::printf("L: %.4f -> %.4f  C: %.4f -> %.4f  D: %.6f -> %.6f\n", c.l_before, c.l_after,
                c.c_before, c.c_after, c.d_before, c.d_after);
    if (!out.step_log.empty()) {
      const auto& first = out.step_log.front();
      std::printf("first step deleted (%d,%d), added (%d,%d)\n", first.deleted.u, first.deleted.v,
                  first.added.u, first.added.v);
    }
  } catch (const sfnet::NotStrongInitially&) {
    std::printf("this seed did not produce a strong network; try another\n");
  }
  return 0;
}
