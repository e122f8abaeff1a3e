#include "cardylab/percolation.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace cardylab {

int effective_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CARDYLAB_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

Coloring sample_coloring(const HexDomain& d, CounterRng& rng) {
  Coloring c{Bits(d.num_faces())};
  for (std::size_t i = 0; i < c.bits.words(); ++i) c.bits.set_word(i, rng.next_u64());
  return c;
}

CrossingTester::CrossingTester(const MarkedDomain& md) : d_(md.domain()) {
  if (md.num_marks() != 4) throw Error(ErrorKind::WrongMarkCount, "crossing needs 4 marks");
  auto src = boundary_arc(md, 1, 2).faces;
  auto dst = boundary_arc(md, 3, 4).faces;
  on_src_.assign(d_.num_faces(), 0);
  on_dst_.assign(d_.num_faces(), 0);
  for (FaceId f : src) on_src_[static_cast<std::size_t>(f)] = 1;
  for (FaceId f : dst) on_dst_[static_cast<std::size_t>(f)] = 1;
  parent_.resize(d_.num_faces() + 2);
  size_.resize(d_.num_faces() + 2);
}

CrossingTester::CrossingTester(const HexDomain& d, const std::vector<FaceId>& src,
                               const std::vector<FaceId>& dst)
    : d_(d) {
  on_src_.assign(d_.num_faces(), 0);
  on_dst_.assign(d_.num_faces(), 0);
  for (FaceId f : src) on_src_[static_cast<std::size_t>(f)] = 1;
  for (FaceId f : dst) on_dst_[static_cast<std::size_t>(f)] = 1;
  parent_.resize(d_.num_faces() + 2);
  size_.resize(d_.num_faces() + 2);
}

bool CrossingTester::operator()(const Coloring& c) {
  const auto nf = static_cast<std::int32_t>(d_.num_faces());
  const std::int32_t vsrc = nf, vdst = nf + 1;
  std::iota(parent_.begin(), parent_.end(), 0);
  std::fill(size_.begin(), size_.end(), 1);
  auto find = [&](std::int32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  };
  auto unite = [&](std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  };
  for (std::int32_t f = 0; f < nf; ++f) {
    if (!c.blue(f)) continue;
    const auto& nbr = d_.face_neighbors(f);
    for (int k = 0; k < 3; ++k) {  // each adjacent pair is seen from one side
      FaceId g = nbr[k];
      if (g >= 0 && c.blue(g)) unite(f, g);
    }
    if (on_src_[static_cast<std::size_t>(f)]) unite(f, vsrc);
    if (on_dst_[static_cast<std::size_t>(f)]) unite(f, vdst);
  }
  return find(vsrc) == find(vdst);
}

bool crosses(const MarkedDomain& md, const Coloring& c) {
  CrossingTester t(md);
  return t(c);
}

namespace {

CrossingEstimate run_mc(const HexDomain& d, const std::vector<FaceId>& src,
                        const std::vector<FaceId>& dst, std::uint64_t trials, std::uint64_t seed,
                        int workers) {
  auto t0 = std::chrono::steady_clock::now();
  workers = effective_workers(workers);
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
  auto body = [&](int w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(trials, lo + chunk);
    if (lo >= hi) return;
    CrossingTester tester(d, src, dst);
    std::uint64_t hits = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      CounterRng rng(seed, i);
      Coloring c = sample_coloring(d, rng);
      if (tester(c)) ++hits;
    }
    counts[static_cast<std::size_t>(w)] = hits;
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  CrossingEstimate est;
  est.trials = trials;
  est.seed = seed;
  for (auto c : counts) est.successes += c;
  auto w = wilson95(est.successes, est.trials);
  est.p_hat = w.p_hat;
  est.ci_low = w.lo;
  est.ci_high = w.hi;
  est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return est;
}

}  // namespace

CrossingEstimate crossing_probability_mc(const MarkedDomain& md, std::uint64_t trials,
                                         std::uint64_t seed, int workers) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (md.num_marks() != 4) throw Error(ErrorKind::WrongMarkCount, "crossing needs 4 marks");
  auto src = boundary_arc(md, 1, 2).faces;
  auto dst = boundary_arc(md, 3, 4).faces;
  return run_mc(md.domain(), src, dst, trials, seed, workers);
}

CrossingEstimate annulus_crossing_mc(double r, double R, double mesh, std::uint64_t trials,
                                     std::uint64_t seed, int workers) {
  if (r > R) throw Error(ErrorKind::DegenerateAnnulus, "inner radius exceeds outer");
  if (!(mesh > 0) || !(mesh < r)) throw Error(ErrorKind::InvalidArgument, "need 0 < mesh < r");

  const double half = R + 2 * mesh;
  const std::int32_t rlo = static_cast<std::int32_t>(std::floor(-half / (1.5 * mesh))) - 1;
  const std::int32_t rhi = static_cast<std::int32_t>(std::ceil(half / (1.5 * mesh))) + 1;
  std::vector<FaceCoord> faces;
  const double sx = mesh * std::sqrt(3.0);
  for (std::int32_t rr = rlo; rr <= rhi; ++rr) {
    double y = 1.5 * mesh * rr;
    if (std::abs(y) > half) continue;
    std::int32_t qlo = static_cast<std::int32_t>(std::floor((-half) / sx - rr / 2.0)) - 1;
    std::int32_t qhi = static_cast<std::int32_t>(std::ceil(half / sx - rr / 2.0)) + 1;
    for (std::int32_t qq = qlo; qq <= qhi; ++qq) {
      double x = sx * (qq + rr / 2.0);
      if (std::abs(x) > half) continue;
      faces.push_back({qq, rr});
    }
  }
  auto dom = std::make_shared<const HexDomain>(build_domain(faces, mesh));

  // Faces whose closed hexagon meets the circle of a given radius.
  auto ring_faces = [&](double rad) {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < static_cast<FaceId>(dom->num_faces()); ++f) {
      QPoint c = face_center_q(dom->faces()[f]);
      double vx[6], vy[6];
      for (int k = 0; k < 6; ++k) {
        vx[k] = dom->px({c.x + kVertexOffsets[k].x, c.y + kVertexOffsets[k].y});
        vy[k] = dom->py({c.x + kVertexOffsets[k].x, c.y + kVertexOffsets[k].y});
      }
      double maxd = 0;
      for (int k = 0; k < 6; ++k) maxd = std::max(maxd, std::hypot(vx[k], vy[k]));
      bool origin_inside = true;
      for (int k = 0; k < 6; ++k) {
        int k2 = (k + 1) % 6;
        if (vx[k] * vy[k2] - vy[k] * vx[k2] < 0) {
          origin_inside = false;
          break;
        }
      }
      double mind = 0;
      if (!origin_inside) {
        mind = maxd;
        for (int k = 0; k < 6; ++k) {
          int k2 = (k + 1) % 6;
          double ex = vx[k2] - vx[k], ey = vy[k2] - vy[k];
          double t = -(vx[k] * ex + vy[k] * ey) / (ex * ex + ey * ey);
          t = std::clamp(t, 0.0, 1.0);
          mind = std::min(mind, std::hypot(vx[k] + t * ex, vy[k] + t * ey));
        }
      }
      if (mind <= rad && rad <= maxd) out.push_back(f);
    }
    return out;
  };

  auto inner = ring_faces(r);
  auto outer = ring_faces(R);
  if (inner.empty() || outer.empty())
    throw Error(ErrorKind::InvalidArgument, "annulus rings are empty at this mesh");

  if (r == R) {
    CrossingEstimate est;
    est.trials = trials;
    est.successes = trials;  // the two face sets coincide
    est.seed = seed;
    auto w = wilson95(est.successes, est.trials);
    est.p_hat = w.p_hat;
    est.ci_low = w.lo;
    est.ci_high = w.hi;
    return est;
  }
  return run_mc(*dom, inner, outer, trials, seed, workers);
}

}  // namespace cardylab
