// Generates one BA network, prints its indicators and category.

#include <cstdio>

#include "sfnet/classifier.hpp"
#include "sfnet/generators.hpp"

int main() {
  sfnet::BaConfig ba;
  ba.n = 500;
  ba.m_attach = 2;
  ba.seed = 2024;
  const sfnet::Graph g = sfnet::generate_ba(ba);

  sfnet::FitConfig fit;
  fit.seed = 1;
  const sfnet::Classification result = sfnet::classify(g, fit);
  const sfnet::SequenceVerdict& v = result.verdicts.front();
  std::printf("n=%d  |E|=%zu\n", g.node_count(), g.edge_count());
  std::printf("alpha=%.3f  x_min=%d  n_tail=%d  ks=%.4f  p=%.2f  r=%.3f (p_r=%.3f)\n",
              v.fit.alpha, v.fit.x_min, v.fit.n_tail, v.fit.ks, v.gof.p_value, v.lr.r, v.lr.p_r);
  std::printf("category: %s\n", sfnet::to_string(result.category));
  return 0;
}
