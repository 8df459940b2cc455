#include "bmf/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>

#include "bmf/error.hpp"

namespace bmf {

namespace {

constexpr double kPi = std::numbers::pi;

bool lex_less(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double min_pairwise(const std::vector<cplx>& ys) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < ys.size(); ++a) {
    for (std::size_t b = a + 1; b < ys.size(); ++b) m = std::min(m, std::abs(ys[a] - ys[b]));
  }
  return m;
}

double scale_of(const std::vector<cplx>& ys) {
  double s = 1.0;
  for (const auto& y : ys) s = std::max(s, std::abs(y));
  return s;
}

double point_segment_distance(cplx c, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(c - a);
  const double t = std::clamp(((c - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(c - (a + t * d));
}

// True iff every root of `got` is within tol of a distinct root of `want`.
bool same_multiset(const std::vector<cplx>& got, const std::vector<cplx>& want, double tol) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& g : got) {
    std::size_t best = want.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(g - want[k]);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    if (best == want.size() || best_d > tol) return false;
    used[best] = true;
  }
  return true;
}

void sort_lex(std::vector<cplx>& v) { std::sort(v.begin(), v.end(), lex_less); }

}  // namespace

// ---- paths ------------------------------------------------------------------

PathSegment PathSegment::line(cplx from, cplx to) {
  PathSegment s;
  s.kind = Kind::Line;
  s.a = from;
  s.b = to;
  return s;
}

PathSegment PathSegment::arc(cplx center, double radius, double theta0, double sweep) {
  PathSegment s;
  s.kind = Kind::Arc;
  s.center = center;
  s.radius = radius;
  s.theta0 = theta0;
  s.sweep = sweep;
  return s;
}

cplx PathSegment::at(double t) const {
  if (kind == Kind::Line) return a + t * (b - a);
  return center + std::polar(radius, theta0 + t * sweep);
}

Path reversed(const Path& path) {
  Path out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (it->kind == PathSegment::Kind::Line) {
      out.push_back(PathSegment::line(it->b, it->a));
    } else {
      out.push_back(PathSegment::arc(it->center, it->radius, it->theta0 + it->sweep, -it->sweep));
    }
  }
  return out;
}

Path concat(const Path& a, const Path& b) {
  Path out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Path GBaseLoop::loop() const { return concat(concat(tail, circle), reversed(tail)); }

// ---- critical values ----------------------------------------------------------

CriticalData critical_values(const BivariatePoly& f_in, const MonodromyOptions& opts) {
  const BivariatePoly f = f_in.monic();
  const int p = f.y_degree();
  if (p < 2) throw InputError("curve must have degree at least 2 in y");
  CriticalData crit;
  UniPoly disc = y_discriminant(f);
  double big = 0;
  for (const auto& c : disc) big = std::max(big, std::abs(c));
  trim(disc, 1e-11 * big);
  if (disc.empty()) {
    throw InputError("polynomial is not square-free in y (discriminant vanishes identically)");
  }
  crit.discriminant = disc;
  int zeros = 0;
  while (zeros < static_cast<int>(disc.size()) && std::abs(disc[zeros]) <= 1e-11 * big) ++zeros;
  UniPoly rest(disc.begin() + zeros, disc.end());
  std::vector<cplx> roots = poly_roots(rest);
  roots.insert(roots.end(), zeros, cplx(0));
  for (const auto& c : cluster_roots(roots, opts.cluster_tol)) {
    crit.values.push_back({c.value, c.multiplicity, 1});
  }

  // Local degree: size of the multiple root in the singular fiber.
  for (auto& cv : crit.values) {
    const auto fiber = cluster_roots(f.fiber_roots(cv.x), 1e-4);
    int singular = 0;
    for (const auto& rc : fiber) {
      if (rc.multiplicity > 1) {
        ++singular;
        cv.local_degree = rc.multiplicity;
      }
    }
    if (singular > 1) {
      std::ostringstream os;
      os << "fiber over x = " << cv.x << " contains " << singular
         << " singular points; only one singular point per fiber is supported";
      throw InputError(os.str());
    }
  }

  double max_abs = 0;
  for (const auto& cv : crit.values) max_abs = std::max(max_abs, std::abs(cv.x));
  crit.radius = std::max(2.0 * max_abs, 1.0);

  // Base point: the candidate angle whose straight tails keep the largest
  // distance from the other critical values.
  const std::size_t q = crit.values.size();
  double best_clear = -1;
  cplx best_u;
  for (int k = 0; k < 72; ++k) {
    const double theta = -kPi / 2 + 2 * kPi * k / 72 + 0.013;
    const cplx u = std::polar(crit.radius, theta);
    double clear = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        if (a != b) clear = std::min(clear, point_segment_distance(crit.values[b].x, u, crit.values[a].x));
      }
    }
    if (clear > best_clear * (1 + 1e-9)) {
      best_clear = clear;
      best_u = u;
    }
  }
  if (q > 1 && best_clear <= 0) throw NumericalError("could not place the base point");
  crit.base = best_u;
  crit.fiber = f.fiber_roots(crit.base);
  sort_lex(crit.fiber);
  if (min_pairwise(crit.fiber) <= 1e-9 * scale_of(crit.fiber)) {
    throw NumericalError("base fiber has a repeated root");
  }
  return crit;
}

GBase build_gbase(const CriticalData& crit, const MonodromyOptions&) {
  GBase g;
  g.base = crit.base;
  const std::size_t q = crit.values.size();
  const cplx u = crit.base;

  double min_dist = std::numeric_limits<double>::infinity();
  double clear = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < q; ++a) {
    min_dist = std::min(min_dist, std::abs(u - crit.values[a].x));
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      min_dist = std::min(min_dist, std::abs(crit.values[a].x - crit.values[b].x));
      clear = std::min(clear, point_segment_distance(crit.values[b].x, u, crit.values[a].x));
    }
  }
  const double rho = 0.4 * std::min(min_dist, clear);
  if (!(rho > 0)) throw InputError("critical values are not separable");

  // Counterclockwise order as seen from u: angle of (c - u) measured from the
  // counterclockwise tangent direction at u.
  const cplx tangent = cplx(0, 1) * u / std::abs(u);
  std::vector<std::size_t> order(q);
  for (std::size_t k = 0; k < q; ++k) order[k] = k;
  auto angle = [&](std::size_t k) { return std::arg((crit.values[k].x - u) / tangent); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });

  for (std::size_t k : order) {
    const cplx c = crit.values[k].x;
    const cplx dir = (u - c) / std::abs(u - c);
    const cplx touch = c + rho * dir;
    GBaseLoop loop;
    loop.critical = k;
    loop.rho = rho;
    loop.tail = {PathSegment::line(u, touch)};
    loop.circle = {PathSegment::arc(c, rho, std::arg(dir), 2 * kPi)};
    g.loops.push_back(std::move(loop));
  }
  return g;
}

// ---- continuation -------------------------------------------------------------

Trajectory track_roots(const BivariatePoly& f, const Path& path, const std::vector<cplx>& start,
                       const MonodromyOptions& opts) {
  Trajectory tr;
  std::vector<cplx> y = start;
  const std::size_t p = y.size();
  tr.t.push_back(0.0);
  tr.samples.push_back(y);
  tr.min_separation = min_pairwise(y);
  constexpr double kMaxStep = 1.0 / 48;
  constexpr int kMaxSteps = 2'000'000;
  std::vector<cplx> next(p);
  for (std::size_t si = 0; si < path.size(); ++si) {
    const PathSegment& seg = path[si];
    double t = 0;
    double h = kMaxStep / 4;
    while (t < 1.0) {
      h = std::min(h, 1.0 - t);
      const cplx x0 = seg.at(t);
      const cplx x1 = seg.at(t + h);
      const cplx dx = x1 - x0;
      const double sep = min_pairwise(y);
      bool ok = true;
      for (std::size_t s = 0; s < p && ok; ++s) {
        const cplx fy = f.dy(x0, y[s]);
        cplx z = y[s] - f.dx(x0, y[s]) / fy * dx;
        bool converged = false;
        for (int it = 0; it < 12; ++it) {
          const cplx d = f.eval(x1, z) / f.dy(x1, z);
          z -= d;
          if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
          if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(z))) {
            converged = true;
            break;
          }
        }
        ok = converged && std::abs(z - y[s]) < sep / 3;
        next[s] = z;
      }
      if (ok) {
        y = next;
        t += h;
        ++tr.steps;
        tr.t.push_back(static_cast<double>(si) + t);
        tr.samples.push_back(y);
        tr.min_separation = std::min(tr.min_separation, min_pairwise(y));
        h = std::min(h * 1.5, kMaxStep);
        if (tr.steps > kMaxSteps) throw NumericalError("root tracking exceeded the step limit");
      } else {
        h /= 2;
        if (h < opts.min_step) {
          std::ostringstream os;
          os << "step size underflow while tracking near x = " << x0
             << " (path passes too close to a critical value)";
          throw NumericalError(os.str());
        }
      }
    }
  }
  return tr;
}

namespace {

struct NonGeneric : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace

BraidWord braid_from_motion(const Trajectory& traj, double angle) {
  if (traj.samples.empty()) throw InputError("empty trajectory");
  const std::size_t p = traj.samples.front().size();
  const cplx rot = std::polar(1.0, -angle);
  auto z = [&](std::size_t k, std::size_t s) { return traj.samples[k][s] * rot; };
  const double scale = scale_of(traj.samples.front());
  const double eps = 1e-12 * scale;

  std::vector<std::size_t> order(p);  // order[pos] = strand
  for (std::size_t s = 0; s < p; ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_less(z(0, a), z(0, b)); });
  for (std::size_t k = 0; k + 1 < p; ++k) {
    if (z(0, order[k + 1]).real() - z(0, order[k]).real() <= eps) {
      throw NonGeneric("two strands share a real part at the start of the motion");
    }
  }
  std::vector<std::size_t> pos(p);
  for (std::size_t k = 0; k < p; ++k) pos[order[k]] = k;

  struct Event {
    double tau;
    std::size_t a, b;
  };
  BraidWord word(static_cast<int>(p));
  std::vector<Generator> letters;
  std::vector<Event> events;
  for (std::size_t k = 0; k + 1 < traj.samples.size(); ++k) {
    events.clear();
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = a + 1; b < p; ++b) {
        const double d0 = z(k, a).real() - z(k, b).real();
        const double d1 = z(k + 1, a).real() - z(k + 1, b).real();
        if (std::abs(d1) <= eps) throw NonGeneric("two strands share a real part at a sample");
        if ((d0 < 0) != (d1 < 0)) events.push_back({d0 / (d0 - d1), a, b});
      }
    }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.tau < y.tau; });
    for (const auto& e : events) {
      const std::size_t pa = pos[e.a];
      const std::size_t pb = pos[e.b];
      if (pa + 1 != pb && pb + 1 != pa) throw NonGeneric("crossing of non-adjacent strands");
      const std::size_t left = std::min(pa, pb);
      const std::size_t sl = order[left];
      const std::size_t sr = order[left + 1];
      const double il = (z(k, sl) + e.tau * (z(k + 1, sl) - z(k, sl))).imag();
      const double ir = (z(k, sr) + e.tau * (z(k + 1, sr) - z(k, sr))).imag();
      if (std::abs(il - ir) <= 1e-9 * scale) throw NonGeneric("strands meet in the projection");
      letters.push_back({static_cast<int>(left) + 1, ir > il ? 1 : -1});
      std::swap(order[left], order[left + 1]);
      pos[order[left]] = left;
      pos[order[left + 1]] = left + 1;
    }
  }
  return BraidWord(static_cast<int>(p), std::move(letters));
}

// ---- assembly -----------------------------------------------------------------

namespace {

std::vector<double> projection_angles(const MonodromyOptions& opts) {
  std::vector<double> angles{0.0};
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(0.01, 0.2);
  for (int r = 0; r < opts.retries; ++r) angles.push_back(dist(rng) * (r % 2 == 0 ? 1 : -1));
  return angles;
}

void check_closed(const Trajectory& tr, const std::vector<cplx>& expected, double tol, const char* what) {
  if (!same_multiset(tr.samples.back(), expected, tol * scale_of(expected))) {
    throw NumericalError(std::string(what) + ": tracked endpoints do not match the fiber");
  }
}

}  // namespace

MonodromyResult braid_monodromy(const BivariatePoly& f_in, const MonodromyOptions& opts) {
  const BivariatePoly f = f_in.monic();
  const int p = f.y_degree();
  MonodromyResult res;
  res.crit = critical_values(f, opts);
  res.gbase = build_gbase(res.crit, opts);
  const std::size_t q = res.gbase.loops.size();
  res.tails.resize(q);
  res.circles.resize(q);

  std::vector<std::exception_ptr> errors(q);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.threads)) if (opts.threads > 1)
  for (std::size_t j = 0; j < q; ++j) {
    try {
      const auto& loop = res.gbase.loops[j];
      res.tails[j] = track_roots(f, loop.tail, res.crit.fiber, opts);
      res.circles[j] = track_roots(f, loop.circle, res.tails[j].samples.back(), opts);
      check_closed(res.circles[j], res.tails[j].samples.back(), opts.match_tol, "loop");
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<BraidWord> tail_words;
  std::vector<BraidWord> circle_words;
  bool generic = false;
  for (double angle : projection_angles(opts)) {
    try {
      tail_words.clear();
      circle_words.clear();
      for (std::size_t j = 0; j < q; ++j) {
        tail_words.push_back(braid_from_motion(res.tails[j], angle));
        circle_words.push_back(braid_from_motion(res.circles[j], angle));
      }
      res.projection_angle = angle;
      generic = true;
      break;
    } catch (const NonGeneric&) {
    }
  }
  if (!generic) throw NumericalError("no generic projection found within the retry budget");

  std::vector<Factor> factors;
  res.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < q; ++j) {
    const auto& cv = res.crit.values[res.gbase.loops[j].critical];
    LoopReport rep;
    rep.critical = cv.x;
    rep.disc_multiplicity = cv.multiplicity;
    rep.local_degree = cv.local_degree;
    rep.steps = res.tails[j].steps * 2 + res.circles[j].steps;
    rep.min_separation = std::min(res.tails[j].min_separation, res.circles[j].min_separation);
    res.min_separation = std::min(res.min_separation, rep.min_separation);
    res.max_steps = std::max(res.max_steps, rep.steps);

    const BraidWord& t = tail_words[j];
    const BraidWord& c = circle_words[j];
    std::optional<HalfTwistWitness> w;
    if (opts.promote) w = classify_positive(c);
    if (w) {
      rep.rho = w->rho;
      factors.push_back(Factor::half_twist(w->conjugator * inverse(t), w->rho));
    } else {
      factors.push_back(Factor::raw(t * c * inverse(t)));
    }
    if (cv.local_degree == 2 && rep.rho) rep.consistent = (*rep.rho == cv.multiplicity);
    res.loops.push_back(rep);
  }
  res.factorization = Factorization(p, std::move(factors));
  if (opts.validate) {
    res.validated = validate(res.factorization);
    if (!res.validated) {
      throw NumericalError(
          "product of the local braids is not the full twist; the curve is probably not in "
          "general position at infinity (try a generic linear change of coordinates, e.g. "
          "x -> x + t*y)");
    }
  }
  return res;
}

BraidWord loop_braid(const BivariatePoly& f_in, const MonodromyResult& result, const Path& loop,
                     const MonodromyOptions& opts) {
  const BivariatePoly f = f_in.monic();
  const Trajectory tr = track_roots(f, loop, result.crit.fiber, opts);
  check_closed(tr, result.crit.fiber, opts.match_tol, "loop");
  return braid_from_motion(tr, result.projection_angle);
}

BivariatePoly random_smooth_cubic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Term> terms{{0, 3, cplx(1)}};
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i + j <= 3; ++i) {
        const double re = dist(rng);
        const double im = dist(rng);
        terms.push_back({i, j, cplx(re, im)});
      }
    }
    BivariatePoly f(terms);
    try {
      const CriticalData crit = critical_values(f);
      if (crit.values.size() != 6) continue;
      bool simple = true;
      for (const auto& cv : crit.values) simple = simple && cv.multiplicity == 1 && cv.local_degree == 2;
      double sep = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = a + 1; b < 6; ++b) sep = std::min(sep, std::abs(crit.values[a].x - crit.values[b].x));
      }
      if (simple && sep > 1e-2) return f;
    } catch (const std::exception&) {
    }
  }
  throw NumericalError("no generic smooth cubic found");
}

}  // namespace bmf
