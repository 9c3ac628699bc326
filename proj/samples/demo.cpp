// Weights a dense random graph, checks its edge sums, then certifies the
// closed-form optimum of the program chain at the threshold.
#include <cstdio>
#include <fstream>
#include <iostream>

#include "tridecomp/tridecomp.hpp"

using namespace tridecomp;

int main(int argc, char** argv) {
  Graph g;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << '\n';
      return 1;
    }
    g = load_edge_list(in);
  } else {
    g = gen_gnp_min_degree(40, 0.95, 34, 7);
  }

  const auto report = decompose<double>(g, default_thread_count());
  const auto sums = verify_edge_sums(report);
  std::printf("n=%zu delta=%zu triangles=%zu\n", g.order(), g.min_degree(), report.triangles.size());
  std::printf("edge sums %s, max error %.3g\n", std::string(to_string(sums.status)).c_str(), sums.worst_error);
  if (report.min_weight) {
    const Triangle t = *report.min_witness;
    std::printf("min weight %.6g at (%u,%u,%u)\n", *report.min_weight, t.a, t.b, t.c);
  }

  const Surd21 d = program::solve_threshold<Surd21>();
  const auto cert = program::certify(d);
  std::printf("d* = %.15f  optimum %s  verdict %s\n", d.to_double(), cert.value.to_string().c_str(),
              std::string(program::to_string(cert.verdict)).c_str());
}
