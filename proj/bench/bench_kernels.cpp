// Benchmark comparing the optimized shuffle kernels (incremental signs,
// term memoization, OpenMP tuple loops) against the serial reference
// implementations, and the parallel Jacobi validator against the serial
// one. Results are cross-checked for equality as they are timed.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "cla/catalog.hpp"
#include "cla/covariants.hpp"
#include "cla/parallel.hpp"

using namespace cla;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

double time_once(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const std::string& name, double ref, double fast1, double fastN) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(10) << ref << "s"
            << std::setw(10) << fast1 << "s" << std::setw(10) << fastN << "s"
            << std::setw(9) << std::setprecision(1)
            << (fastN > 0 ? ref / fastN : 0.0) << "x\n";
}

OrthRep tensor_rep(int dim_v) {
  CommutationFactor cf(AbelianGroup(0, {2}), Q, {{Scalar::of_int(-1, Q)}});
  std::vector<BasisVector> basis;
  for (int i = 0; i < dim_v; ++i)
    basis.push_back({"u" + std::to_string(i), cf.group().zero()});
  GradedSpace v(Q, cf, std::move(basis));
  FormEps b{v, Matrix::identity(dim_v, Q)};
  return catalog_so_tensor_sl2(v, b, cf.group().element({1}));
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";
  int max_threads = parallel::threads();
  std::cout << "threads available: " << max_threads << "\n\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right
            << std::setw(11) << "reference" << std::setw(11) << "fast(1)"
            << std::setw(11) << "fast(N)" << std::setw(10) << "speedup\n";

  // wedge: N(mu) of the tensor rep on a dim-6 odd space (Alt^4)
  {
    OrthRep rep = tensor_rep(3);
    AltMap mu = moment_map(rep);
    Pairing bg = Pairing::from_form(*rep.algebra.form());
    AltMap out_ref, out_f1, out_fn;
    double ref = time_once(
        [&] { out_ref = alt_norm(mu, bg, EvalStrategy::reference); });
    parallel::set_threads(1);
    double f1 = time_once([&] { out_f1 = alt_norm(mu, bg); });
    parallel::set_threads(max_threads);
    double fn = time_once([&] { out_fn = alt_norm(mu, bg); });
    if (!(out_ref == out_f1) || !(out_ref == out_fn)) {
      std::cerr << "norm kernels disagree\n";
      return 1;
    }
    row("norm N(mu), dim 6, arity 4", ref, f1, fn);
  }

  // compose: mu∘psi (identity b shape) on the dim-4 tensor fixture
  {
    OrthRep rep = tensor_rep(2);
    Covariants cov = covariants(rep);
    AltMap out_ref, out_f1, out_fn;
    double ref = time_once([&] {
      out_ref = exterior_compose(cov.mu, cov.psi, EvalStrategy::reference);
    });
    parallel::set_threads(1);
    double f1 =
        time_once([&] { out_f1 = exterior_compose(cov.mu, cov.psi); });
    parallel::set_threads(max_threads);
    double fn =
        time_once([&] { out_fn = exterior_compose(cov.mu, cov.psi); });
    if (!(out_ref == out_f1) || !(out_ref == out_fn)) {
      std::cerr << "compose kernels disagree\n";
      return 1;
    }
    row("compose mu.psi, dim 4, arity 6", ref, f1, fn);
  }

  // compose: psi∘psi (identity c shape), reference gets expensive here
  {
    OrthRep rep = tensor_rep(2);
    Covariants cov = covariants(rep);
    AltMap out_ref, out_f1, out_fn;
    double ref = time_once([&] {
      out_ref = exterior_compose(cov.psi, cov.psi, EvalStrategy::reference);
    });
    parallel::set_threads(1);
    double f1 =
        time_once([&] { out_f1 = exterior_compose(cov.psi, cov.psi); });
    parallel::set_threads(max_threads);
    double fn =
        time_once([&] { out_fn = exterior_compose(cov.psi, cov.psi); });
    if (!(out_ref == out_f1) || !(out_ref == out_fn)) {
      std::cerr << "compose kernels disagree\n";
      return 1;
    }
    row("compose psi.psi, dim 4, arity 9", ref, f1, fn);
  }

  // Jacobi validation: parallel vs serial on gl of a dim-5 space
  {
    CommutationFactor cf(AbelianGroup(0, {2}), Q, {{Scalar::of_int(-1, Q)}});
    std::vector<BasisVector> basis;
    for (int i = 0; i < 5; ++i)
      basis.push_back({"e" + std::to_string(i),
                       cf.group().element({i % 2})});
    GradedSpace v(Q, cf, std::move(basis));
    EndoAlgebra gl = gl_eps(v);
    Verdict ser, par1, parN;
    double ref = time_once([&] { ser = gl.algebra.validate_serial(); });
    parallel::set_threads(1);
    double f1 = time_once([&] { par1 = gl.algebra.validate(); });
    parallel::set_threads(max_threads);
    double fn = time_once([&] { parN = gl.algebra.validate(); });
    if (ser.pass != par1.pass || ser.pass != parN.pass) {
      std::cerr << "validators disagree\n";
      return 1;
    }
    row("jacobi gl(5), 15625 triples", ref, f1, fn);
  }

  // the acceptance-scale run: Q∘psi at arity 12 (fast only; the reference
  // path would enumerate 1.7e8 shuffles with quadratic sign computation)
  if (heavy) {
    OrthRep rep = tensor_rep(2);
    Covariants cov = covariants(rep);
    AltMap out_f1, out_fn;
    parallel::set_threads(1);
    double f1 = time_once([&] { out_f1 = exterior_compose(cov.q, cov.psi); });
    parallel::set_threads(max_threads);
    double fn = time_once([&] { out_fn = exterior_compose(cov.q, cov.psi); });
    if (!(out_f1 == out_fn)) {
      std::cerr << "compose kernels disagree\n";
      return 1;
    }
    row("compose Q.psi, dim 4, arity 12", 0.0, f1, fn);
  } else {
    std::cout << "(run with --heavy for the arity-12 composition)\n";
  }
  return 0;
}
