#include "htspec/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "htspec/matching.hpp"

namespace htspec {
namespace {

template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Witnessed {
  Subtree witness;
  Complex value;
};

struct Cluster {
  std::vector<Witnessed> members;
  int collision_vertex = -1;
};

Subtree map_to_parent(const Hypergraph& parent, const Component& comp, const Subtree& local) {
  std::vector<int> edges;
  for (int e : local.edge_indices) edges.push_back(comp.edge_map[static_cast<std::size_t>(e)]);
  return make_subtree(parent, std::move(edges));
}

}  // namespace

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::kCertified:
      return "certified";
    case CertStatus::kSingular:
      return "singular";
    case CertStatus::kCollision:
      return "collision";
    case CertStatus::kUncertified:
      return "uncertified";
  }
  return "uncertified";
}

std::vector<Complex> SpectrumReport::eigenvalues() const {
  std::vector<Complex> out;
  for (const auto& t : trivial) out.push_back(t.lambda);
  for (const auto& r : roots) {
    if (r.status != CertStatus::kCollision) out.push_back(r.lambda);
  }
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

int SpectrumReport::count(CertStatus s) const {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](const RootEigenvalue& r) { return r.status == s; }));
}

int resolve_thread_count(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("HTSPEC_THREADS")) {
    int c = std::atoi(cap);
    if (c > 0) n = std::min(n, c);
  }
  return std::max(1, n);
}

Certification certify_root(const WeightedHypertree& tree, Complex lambda, std::span<const Subtree> witnesses,
                           double tol, double check_tol) {
  Certification best;
  std::ostringstream notes;
  bool saw_singular = false;
  for (const auto& witness : witnesses) {
    if (witness.is_singleton()) continue;
    try {
      Component sub = extract_subtree(tree, witness);
      NormalBuild built = build_normal_matrix(sub.tree, lambda, check_tol);
      if (const auto* s = std::get_if<Singular>(&built)) {
        saw_singular = true;
        notes << "witness " << witness.edge_indices.size() << "-edge: singular at B(" << s->vertex << "," << s->edge
              << "); ";
        continue;
      }
      Eigenpair pair = eigenvector_from_normal(sub.tree, std::get<WeightedIncidenceMatrix>(built), lambda, tol);
      pair = lift_to_tree(tree, witness, pair, tol);
      if (pair.residual <= tol) {
        best.status = CertStatus::kCertified;
        best.residual = pair.residual;
        best.pair = std::move(pair);
        best.used_witness = witness;
        best.note = notes.str();
        return best;
      }
      notes << "lifted residual " << pair.residual << " above tolerance; ";
    } catch (const NotARootError& e) {
      notes << "not a root on witness (" << e.residual() << "); ";
    } catch (const SingularError& e) {
      saw_singular = true;
      notes << e.what() << "; ";
    } catch (const std::exception& e) {
      notes << e.what() << "; ";
    }
  }
  best.status = saw_singular ? CertStatus::kSingular : CertStatus::kUncertified;
  best.note = notes.str();
  return best;
}

SpectrumReport eigenvalues(const WeightedHypertree& tree, const SpectrumOptions& opts) {
  if (tree.k() < 3) {
    throw UnsupportedError("eigenvalues need k >= 3; for k = 2 use the matching polynomial itself, which "
                           "coincides with the characteristic polynomial");
  }
  const int threads = resolve_thread_count(opts.threads);
  SpectrumReport report;
  report.dedup_tol = opts.dedup_tol;
  report.tol = opts.tol;

  for (int v = 0; v < tree.n(); ++v) {
    Complex w = tree.vertex_weight(v).to_complex();
    bool seen = std::any_of(report.trivial.begin(), report.trivial.end(),
                            [&](const TrivialEigenvalue& t) { return roots_close(t.lambda, w, opts.dedup_tol); });
    if (seen) continue;
    report.trivial.push_back({w, v, false, unit_eigenpair(tree, v).residual});
  }

  struct Task {
    const Component* comp;
    Subtree local;
    Subtree global;
  };
  std::vector<Component> comps = prune_zero_edges(tree);
  std::vector<Task> tasks;
  for (const auto& comp : comps) {
    if (comp.tree.m() == 0) continue;
    for (auto& sub : enumerate_subtrees(comp.tree)) {
      if (sub.is_singleton()) continue;
      Subtree global = map_to_parent(tree.graph(), comp, sub);
      tasks.push_back({&comp, std::move(sub), std::move(global)});
    }
  }

  std::vector<std::vector<Root>> task_roots(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    Component piece = extract_subtree(tasks[i].comp->tree, tasks[i].local);
    task_roots[i] = distinct_roots(matching_polynomial_dp(piece.tree), opts.root_tol, opts.dedup_tol);
  });

  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (const auto& r : task_roots[i]) {
      auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
        return roots_close(c.members.front().value, r.value, opts.dedup_tol);
      });
      if (it == clusters.end()) {
        clusters.push_back({{{tasks[i].global, r.value}}, -1});
      } else {
        it->members.push_back({tasks[i].global, r.value});
      }
    }
  }
  for (auto& c : clusters) {
    std::stable_sort(c.members.begin(), c.members.end(),
                     [](const Witnessed& a, const Witnessed& b) { return subtree_smaller(a.witness, b.witness); });
    Complex lam = c.members.front().value;
    for (int v = 0; v < tree.n() && c.collision_vertex < 0; ++v) {
      if (roots_close(lam, tree.vertex_weight(v).to_complex(), opts.dedup_tol)) c.collision_vertex = v;
    }
    if (c.collision_vertex >= 0) {
      Complex w = tree.vertex_weight(c.collision_vertex).to_complex();
      for (auto& t : report.trivial) {
        if (roots_close(t.lambda, w, opts.dedup_tol)) t.also_subtree_root = true;
      }
    }
  }

  report.roots.resize(clusters.size());
  parallel_for(clusters.size(), threads, [&](std::size_t i) {
    const Cluster& c = clusters[i];
    RootEigenvalue& entry = report.roots[i];
    entry.lambda = c.members.front().value;
    entry.witness = c.members.front().witness;
    for (const auto& m : c.members) {
      if (std::find(entry.witnesses.begin(), entry.witnesses.end(), m.witness) == entry.witnesses.end()) {
        entry.witnesses.push_back(m.witness);
      }
    }
    if (c.collision_vertex >= 0) {
      entry.status = CertStatus::kCollision;
      entry.collision_vertex = c.collision_vertex;
      entry.residual = unit_eigenpair(tree, c.collision_vertex).residual;
      entry.note = "equals w(" + std::to_string(c.collision_vertex) + "); reported as a trivial eigenvalue";
      return;
    }
    Certification cert = certify_root(tree, entry.lambda, entry.witnesses, opts.tol);
    entry.status = cert.status;
    entry.residual = cert.residual;
    entry.note = cert.note;
    if (opts.keep_eigenvectors) entry.pair = std::move(cert.pair);
  });
  std::stable_sort(report.roots.begin(), report.roots.end(),
                   [](const RootEigenvalue& a, const RootEigenvalue& b) { return root_less(a.lambda, b.lambda); });
  std::stable_sort(report.trivial.begin(), report.trivial.end(),
                   [](const TrivialEigenvalue& a, const TrivialEigenvalue& b) { return root_less(a.lambda, b.lambda); });

  if (tree.weights().is_nonnegative()) {
    report.spectral_radius = largest_real_root(matching_polynomial_dp(tree), opts.root_tol);
  }
  return report;
}

RadiusEstimate spectral_radius_estimates(const WeightedHypertree& tree) {
  if (!tree.weights().is_nonnegative()) {
    throw DomainError("spectral radius needs nonnegative weights (w(v) >= 0 real, w(e) > 0 real)");
  }
  RadiusEstimate est;
  est.by_roots = largest_real_root(matching_polynomial_dp(tree));
  PowerResult power = power_spectral_radius(tree);
  est.by_power = power.rho;
  est.power_iterations = power.iterations;
  est.gap = std::abs(est.by_roots - est.by_power);
  return est;
}

double spectral_radius(const WeightedHypertree& tree, double agreement_tol) {
  RadiusEstimate est = spectral_radius_estimates(tree);
  if (est.gap > agreement_tol) {
    std::ostringstream os;
    os.precision(17);
    os << "spectral radius routes disagree: matching-polynomial root " << est.by_roots << ", power iteration "
       << est.by_power << " (gap " << est.gap << ")";
    throw NumericError(os.str());
  }
  return est.by_roots;
}

SpectrumReport corollary_spectrum(const Hypergraph& tree, LaplacianSign sign, const SpectrumOptions& opts) {
  WeightedHypertree weighted(tree, corollary_weighting(tree, sign));
  return eigenvalues(weighted, opts);
}

VerificationSummary verify_report(const WeightedHypertree& tree, const SpectrumReport& report, double tol) {
  VerificationSummary sum;
  for (const auto& t : report.trivial) {
    ++sum.trivial_checked;
    VerificationEntry entry{t.lambda, CertStatus::kCertified, 0.0, "trivial"};
    try {
      Eigenpair p = unit_eigenpair(tree, t.vertex);
      entry.residual = p.residual;
      if (!roots_close(p.lambda, t.lambda, report.dedup_tol) || p.residual > tol) {
        entry.status = CertStatus::kUncertified;
        entry.note = "unit vector does not certify this value";
        ++sum.trivial_failed;
      }
    } catch (const std::exception& e) {
      entry.status = CertStatus::kUncertified;
      entry.note = e.what();
      ++sum.trivial_failed;
    }
    sum.entries.push_back(std::move(entry));
  }
  for (const auto& r : report.roots) {
    VerificationEntry entry{r.lambda, CertStatus::kUncertified, 0.0, {}};
    if (r.status == CertStatus::kCollision) {
      int v = r.collision_vertex;
      if (v >= 0 && v < tree.n() && roots_close(r.lambda, tree.vertex_weight(v).to_complex(), report.dedup_tol)) {
        entry.status = CertStatus::kCollision;
        entry.residual = unit_eigenpair(tree, v).residual;
        ++sum.collisions;
      } else {
        entry.note = "collision vertex does not carry this weight";
        ++sum.uncertified;
      }
      sum.entries.push_back(std::move(entry));
      continue;
    }
    std::vector<Subtree> witnesses = r.witnesses.empty() ? std::vector<Subtree>{r.witness} : r.witnesses;
    std::vector<Subtree> valid;
    for (const auto& w : witnesses) {
      try {
        Subtree checked = make_subtree(tree.graph(), w.edge_indices);
        valid.push_back(std::move(checked));
      } catch (const DomainError& e) {
        entry.note += std::string("invalid witness: ") + e.what() + "; ";
      }
    }
    Certification cert = certify_root(tree, r.lambda, valid, tol);
    entry.status = cert.status;
    entry.residual = cert.residual;
    entry.note += cert.note;
    switch (cert.status) {
      case CertStatus::kCertified:
        ++sum.certified;
        break;
      case CertStatus::kSingular:
        ++sum.singular;
        break;
      default:
        ++sum.uncertified;
        break;
    }
    sum.entries.push_back(std::move(entry));
  }
  return sum;
}

}  // namespace htspec
