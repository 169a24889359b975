#include "bergkern/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>

#include "bergkern/complex_poly.hpp"

namespace bergkern {
namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre rule mapped to [0,1]. Cached per order; node computation is
// the usual Newton iteration on the Legendre recurrence and is deterministic.
struct GLRule {
  std::vector<double> x, w;
};

const GLRule& gl_rule(int n) {
  static std::map<int, GLRule>* cache = new std::map<int, GLRule>();
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(n);
  if (it != cache->end()) return it->second;

  GLRule rule;
  rule.x.assign(static_cast<std::size_t>(n), 0.0);
  rule.w.assign(static_cast<std::size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    // map [-1,1] -> [0,1]; z is the i-th root from the +1 end
    rule.x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
    rule.x[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
    rule.w[static_cast<std::size_t>(i)] = 0.5 * w;
    rule.w[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
  }
  return cache->emplace(n, std::move(rule)).first->second;
}

// A point where the full integrand (callback times weight) is not smooth.
// beta is the combined local power: |integrand| ~ |z - a|^beta * smooth.
// When a weight factor with negative exponent sits here, that factor is
// pulled out of the numeric evaluation and restored analytically through
// the graded map (pull_index / pull_p).
struct SingularPt {
  Complex a;
  double r = 0.0, th = 0.0;
  double beta = 0.0;
  int pull_index = -1;
  double pull_p = 0.0;
  double kappa = 1.0;
  int rb = -1, tb = -1;
};

double arg02pi(Complex a) {
  double t = std::arg(a);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t -= 2.0 * kPi;
  return t;
}

// |z - a|^beta with beta a nonnegative even integer is smooth.
bool smooth_exponent(double beta) {
  if (beta < -1e-12) return false;
  const double half = 0.5 * beta;
  return std::abs(half - std::round(half)) < 1e-12;
}

// Power map u = x^kappa near a singular point. kappa is chosen so the mapped
// radial factor x^{kappa(beta+2)-1} has an integral, nonnegative exponent,
// which makes the mapped integrand smooth whenever kappa*beta is integral.
double choose_kappa(double beta, double override_k) {
  if (override_k > 0.0) return override_k;
  for (int k = 1; k <= 12; ++k) {
    const double kb = k * beta;
    if (std::abs(kb - std::round(kb)) < 1e-9 && k * (beta + 2.0) >= 1.0 - 1e-12)
      return static_cast<double>(k);
  }
  return std::max(2.0, std::ceil(2.0 / (beta + 2.0)));
}

std::vector<SingularPt> build_singular_table(const WeightSpec* spec,
                                             std::span<const GradeHint> hints,
                                             double grading_override) {
  std::vector<SingularPt> pts;
  auto locate = [&pts](Complex a) -> SingularPt* {
    for (auto& p : pts)
      if (p.a == a) return &p;
    return nullptr;
  };
  if (spec) {
    for (int k = 0; k < spec->size(); ++k) {
      const WeightFactor& f = spec->factor(k);
      if (f.p == 0.0) continue;
      SingularPt* p = locate(f.a);
      if (!p) {
        pts.push_back({f.a, std::abs(f.a), arg02pi(f.a)});
        p = &pts.back();
      }
      p->beta += f.p;
      if (f.p < 0.0) {
        p->pull_index = k;
        p->pull_p = f.p;
      }
    }
  }
  for (const GradeHint& h : hints) {
    if (!(std::abs(h.a) < 1.0))
      throw DomainViolation("grade hint outside the open unit disk");
    SingularPt* p = locate(h.a);
    if (!p) {
      pts.push_back({h.a, std::abs(h.a), arg02pi(h.a)});
      p = &pts.back();
    }
    p->beta += h.exponent;
  }
  std::erase_if(pts, [](const SingularPt& p) {
    return p.pull_index < 0 && smooth_exponent(p.beta);
  });
  for (auto& p : pts) {
    if (!(p.beta > -2.0))
      throw DomainViolation("combined local exponent at a singular point is <= -2");
    p.kappa = choose_kappa(p.beta, grading_override);
  }
  return pts;
}

struct Mesh {
  std::vector<SingularPt> sing;
  int origin_si = -1;
  std::vector<double> rb;  // radial breaks, 0 = rb[0] < ... < rb.back() = 1
  std::vector<double> tb;  // angular breaks in [0, 2pi)
};

std::vector<double> with_midpoints(const std::vector<double>& v) {
  std::vector<double> out;
  out.reserve(2 * v.size());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    out.push_back(v[i]);
    out.push_back(0.5 * (v[i] + v[i + 1]));
  }
  out.push_back(v.back());
  return out;
}

// Breaks are pinned to the exact singular coordinates; every singular point
// becomes a cell corner (or sits on the r = 0 edge), and midpoint insertion
// keeps two distinct singular points from sharing a cell.
Mesh build_mesh(std::vector<SingularPt> pts) {
  Mesh m;
  m.sing = std::move(pts);

  std::vector<double> rset = {0.0, 1.0};
  std::vector<double> tset;
  for (const auto& p : m.sing) {
    if (p.r > 0.0) {
      rset.push_back(p.r);
      tset.push_back(p.th);
    }
  }
  std::sort(rset.begin(), rset.end());
  rset.erase(std::unique(rset.begin(), rset.end()), rset.end());
  m.rb = with_midpoints(rset);

  if (tset.empty()) {
    m.tb = {0.0, 0.5 * kPi, kPi, 1.5 * kPi};
  } else {
    std::sort(tset.begin(), tset.end());
    tset.erase(std::unique(tset.begin(), tset.end()), tset.end());
    std::vector<double> tb;
    for (std::size_t i = 0; i < tset.size(); ++i) {
      tb.push_back(tset[i]);
      const double next = (i + 1 < tset.size()) ? tset[i + 1] : tset[0] + 2.0 * kPi;
      double mid = 0.5 * (tset[i] + next);
      if (mid >= 2.0 * kPi) mid -= 2.0 * kPi;
      tb.push_back(mid);
    }
    std::sort(tb.begin(), tb.end());
    tb.erase(std::unique(tb.begin(), tb.end()), tb.end());
    // keep panels at most pi/2 wide so the base mesh resolves the geometry
    for (;;) {
      std::vector<double> widened;
      bool any = false;
      for (std::size_t i = 0; i < tb.size(); ++i) {
        const double lo = tb[i];
        const double hi = (i + 1 < tb.size()) ? tb[i + 1] : tb[0] + 2.0 * kPi;
        widened.push_back(lo);
        if (hi - lo > 0.5 * kPi + 1e-12) {
          double mid = 0.5 * (lo + hi);
          if (mid >= 2.0 * kPi) mid -= 2.0 * kPi;
          widened.push_back(mid);
          any = true;
        }
      }
      std::sort(widened.begin(), widened.end());
      widened.erase(std::unique(widened.begin(), widened.end()), widened.end());
      tb = std::move(widened);
      if (!any) break;
    }
    m.tb = std::move(tb);
  }

  for (std::size_t si = 0; si < m.sing.size(); ++si) {
    SingularPt& p = m.sing[si];
    if (p.r > 0.0) {
      p.rb = static_cast<int>(std::find(m.rb.begin(), m.rb.end(), p.r) - m.rb.begin());
      p.tb = static_cast<int>(std::find(m.tb.begin(), m.tb.end(), p.th) - m.tb.begin());
    } else {
      m.origin_si = static_cast<int>(si);
    }
  }
  return m;
}

enum class CellKind { regular, duffy, edge };

// regular: (x,y) are (r, theta) directly.
// duffy:   (x,y) in [0,1]^2; anchored at (rc,tc) with signed extents
//          (dr,dt); tri selects the triangle of the Duffy pair; u = x^kappa.
// edge:    (x,y) with r = R x^kappa (R stored in dr) and y = theta; used for
//          a singular point at the origin.
struct CellGeom {
  CellKind kind = CellKind::regular;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  double rc = 0, tc = 0, dr = 0, dt = 0;
  int tri = 0;
  int si = -1;
};

struct EngineCtx {
  int dim = 1;
  int nx = 2;
  int ny = 2;
  const BatchIntegrand* f = nullptr;
  const WeightSpec* spec = nullptr;
  const std::vector<SingularPt>* sing = nullptr;
  std::vector<Complex> scratch;
  std::size_t evals = 0;
};

void eval_cell_rule(const CellGeom& g, int nx, int ny, EngineCtx& ctx,
                    std::span<Complex> out) {
  std::fill(out.begin(), out.end(), Complex{});
  const GLRule& rx = gl_rule(nx);
  const GLRule& ry = gl_rule(ny);
  const double sx = g.x1 - g.x0, sy = g.y1 - g.y0;
  for (int ix = 0; ix < nx; ++ix) {
    const double X = g.x0 + sx * rx.x[static_cast<std::size_t>(ix)];
    const double wx = rx.w[static_cast<std::size_t>(ix)] * sx;
    for (int iy = 0; iy < ny; ++iy) {
      const double Y = g.y0 + sy * ry.x[static_cast<std::size_t>(iy)];
      const double base_w = wx * ry.w[static_cast<std::size_t>(iy)] * sy;
      Complex z;
      double w = 0.0;
      switch (g.kind) {
        case CellKind::regular: {
          const double r = X;
          z = std::polar(r, Y);
          const double meas = ctx.spec ? weight_eval(*ctx.spec, z) : 1.0;
          w = base_w * r * meas / kPi;
          break;
        }
        case CellKind::duffy: {
          const SingularPt& sp = (*ctx.sing)[static_cast<std::size_t>(g.si)];
          const double u = std::pow(X, sp.kappa);
          const double adr = std::abs(g.dr), adt = std::abs(g.dt);
          double xi, eta;
          if (g.tri == 0) {
            xi = adr * u;
            eta = adt * u * Y;
          } else {
            xi = adr * u * Y;
            eta = adt * u;
          }
          const double r = g.rc + (g.dr < 0.0 ? -xi : xi);
          const double th = g.tc + (g.dt < 0.0 ? -eta : eta);
          z = std::polar(r, th);
          const double geom = base_w * adr * adt * sp.kappa * r / kPi;
          if (sp.pull_index >= 0) {
            const double sh = std::sin(0.5 * eta);
            const double dist2 = xi * xi + 4.0 * r * g.rc * sh * sh;
            const double gfac = std::pow(dist2 / (u * u), 0.5 * sp.pull_p);
            const double hred = weight_eval_excluding(*ctx.spec, sp.pull_index, z);
            w = geom * std::pow(X, sp.kappa * (sp.pull_p + 2.0) - 1.0) * gfac * hred;
          } else {
            const double meas = ctx.spec ? weight_eval(*ctx.spec, z) : 1.0;
            w = geom * std::pow(X, 2.0 * sp.kappa - 1.0) * meas;
          }
          break;
        }
        case CellKind::edge: {
          const SingularPt& sp = (*ctx.sing)[static_cast<std::size_t>(g.si)];
          const double u = std::pow(X, sp.kappa);
          const double R = g.dr;
          const double r = R * u;
          z = std::polar(r, Y);
          const double geom = base_w * sp.kappa / kPi;
          if (sp.pull_index >= 0) {
            const double hred = weight_eval_excluding(*ctx.spec, sp.pull_index, z);
            w = geom * std::pow(R, sp.pull_p + 2.0) *
                std::pow(X, sp.kappa * (sp.pull_p + 2.0) - 1.0) * hred;
          } else {
            const double meas = ctx.spec ? weight_eval(*ctx.spec, z) : 1.0;
            w = geom * R * R * std::pow(X, 2.0 * sp.kappa - 1.0) * meas;
          }
          break;
        }
      }
      (*ctx.f)(z, std::span<Complex>(ctx.scratch.data(), static_cast<std::size_t>(ctx.dim)));
      ++ctx.evals;
      for (int i = 0; i < ctx.dim; ++i) out[static_cast<std::size_t>(i)] += w * ctx.scratch[static_cast<std::size_t>(i)];
    }
  }
}

struct CellRec {
  CellGeom g;
  int depth = 0;
  std::uint64_t id = 0;
  std::vector<Complex> val;
  std::vector<double> est;
  double priority = 0.0;
  bool split = false;
};

// Base rule order per cell: grows with the requested number of digits and is
// capped by the configured order, so delivered accuracy tracks abs_tol
// instead of saturating at the cap for every tolerance.
int scaled_order(int cap, double tol) {
  const double digits = -std::log10(std::min(tol, 0.1));
  const int want = static_cast<int>(std::ceil(1.2 * digits));
  return std::clamp(want, 2, cap);
}

struct QueueEntry {
  double priority;
  std::uint64_t id;
  std::size_t index;
};
struct QueueLess {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.priority != b.priority) return a.priority < b.priority;
    return a.id > b.id;  // earlier cells first on ties
  }
};

// Two-level estimate: the cell value is the base-order rule, the error
// estimate the difference against the doubled-order reference, per
// component. The estimate certifies the returned value.
void measure_cell(CellRec& rec, EngineCtx& ctx, std::vector<Complex>& ref_buf,
                  double tol) {
  const int nx = ctx.nx, ny = ctx.ny;
  rec.val.assign(static_cast<std::size_t>(ctx.dim), Complex{});
  ref_buf.assign(static_cast<std::size_t>(ctx.dim), Complex{});
  eval_cell_rule(rec.g, nx, ny, ctx, rec.val);
  eval_cell_rule(rec.g, 2 * nx, 2 * ny, ctx, ref_buf);
  rec.est.assign(static_cast<std::size_t>(ctx.dim), 0.0);
  double worst = 0.0;
  for (int i = 0; i < ctx.dim; ++i) {
    double e = std::abs(ref_buf[static_cast<std::size_t>(i)] - rec.val[static_cast<std::size_t>(i)]);
    if (!std::isfinite(e)) e = std::numeric_limits<double>::infinity();
    rec.est[static_cast<std::size_t>(i)] = e;
    worst = std::max(worst, e);
  }
  rec.priority = worst / tol;
}

Complex pairwise_component(const std::vector<const CellRec*>& leaves, int i,
                           std::size_t lo, std::size_t hi) {
  if (hi - lo <= 4) {
    Complex acc{};
    for (std::size_t j = lo; j < hi; ++j) acc += leaves[j]->val[static_cast<std::size_t>(i)];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_component(leaves, i, lo, mid) + pairwise_component(leaves, i, mid, hi);
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
    throw DomainViolation("abs_tol must be positive and finite");
  if (max_depth < 1 || max_depth > 40)
    throw DomainViolation("max_depth must lie in [1, 40]");
  if (radial_order < 2 || radial_order > 64 || angular_order < 2 || angular_order > 64)
    throw DomainViolation("quadrature orders must lie in [2, 64]");
  if (!(grading_exponent >= 0.0) || grading_exponent > 16.0)
    throw DomainViolation("grading_exponent must lie in [0, 16]");
}

BatchResult integrate_disk_batch(int dim, const BatchIntegrand& f,
                                 const WeightSpec* spec,
                                 std::span<const GradeHint> hints,
                                 const QuadConfig& cfg) {
  cfg.validate();
  if (dim <= 0) throw DomainViolation("batch dimension must be positive");

  Mesh mesh = build_mesh(build_singular_table(spec, hints, cfg.grading_exponent));

  EngineCtx ctx;
  ctx.dim = dim;
  ctx.nx = scaled_order(cfg.radial_order, cfg.abs_tol);
  ctx.ny = scaled_order(cfg.angular_order, cfg.abs_tol);
  ctx.f = &f;
  ctx.spec = spec;
  ctx.sing = &mesh.sing;
  ctx.scratch.assign(static_cast<std::size_t>(dim), Complex{});

  const double tol = cfg.abs_tol;
  std::vector<CellRec> cells;
  std::vector<Complex> ref_buf;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueLess> queue;
  std::uint64_t next_id = 0;

  auto add_cell = [&](CellGeom g, int depth) {
    CellRec rec;
    rec.g = g;
    rec.depth = depth;
    rec.id = next_id++;
    measure_cell(rec, ctx, ref_buf, tol);
    cells.push_back(std::move(rec));
    queue.push({cells.back().priority, cells.back().id, cells.size() - 1});
  };

  const std::size_t nt = mesh.tb.size();
  for (std::size_t i = 0; i + 1 < mesh.rb.size(); ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const double rlo = mesh.rb[i], rhi = mesh.rb[i + 1];
      const double tlo = mesh.tb[j];
      const double thi = (j + 1 < nt) ? mesh.tb[j + 1] : mesh.tb[0] + 2.0 * kPi;
      const int jhi = (j + 1 < nt) ? static_cast<int>(j + 1) : 0;

      int corner_si = -1;
      double rc = 0.0, tc = 0.0;
      for (std::size_t si = 0; si < mesh.sing.size(); ++si) {
        const SingularPt& p = mesh.sing[si];
        if (p.rb < 0) continue;
        const bool rmatch = (p.rb == static_cast<int>(i) || p.rb == static_cast<int>(i + 1));
        const bool tmatch = (p.tb == static_cast<int>(j) || p.tb == jhi);
        if (rmatch && tmatch) {
          if (corner_si >= 0)
            throw Error("internal: two singular points share one cell");
          corner_si = static_cast<int>(si);
          rc = mesh.rb[static_cast<std::size_t>(p.rb)];
          tc = (p.tb == static_cast<int>(j)) ? tlo : thi;
        }
      }

      CellGeom g;
      if (corner_si >= 0) {
        g.kind = CellKind::duffy;
        g.si = corner_si;
        g.rc = rc;
        g.tc = tc;
        g.dr = (rc == rlo) ? (rhi - rlo) : (rlo - rhi);
        g.dt = (tc == tlo) ? (thi - tlo) : (tlo - thi);
        g.tri = 0;
        add_cell(g, 0);
        g.tri = 1;
        add_cell(g, 0);
      } else if (i == 0 && mesh.origin_si >= 0) {
        g.kind = CellKind::edge;
        g.si = mesh.origin_si;
        g.dr = rhi;  // R
        g.y0 = tlo;
        g.y1 = thi;
        add_cell(g, 0);
      } else {
        g.kind = CellKind::regular;
        g.x0 = rlo;
        g.x1 = rhi;
        g.y0 = tlo;
        g.y1 = thi;
        add_cell(g, 0);
      }
    }
  }

  std::vector<double> totals(static_cast<std::size_t>(dim), 0.0);
  for (const auto& rec : cells)
    for (int ii = 0; ii < dim; ++ii) totals[static_cast<std::size_t>(ii)] += rec.est[static_cast<std::size_t>(ii)];

  const std::size_t leaf_cap = std::clamp<std::size_t>(
      static_cast<std::size_t>((8u << 20) / static_cast<unsigned>(dim)), 4096, 1u << 19);

  auto recompute_totals = [&]() {
    std::fill(totals.begin(), totals.end(), 0.0);
    for (const auto& rec : cells) {
      if (rec.split) continue;
      for (int ii = 0; ii < dim; ++ii) totals[static_cast<std::size_t>(ii)] += rec.est[static_cast<std::size_t>(ii)];
    }
  };

  std::size_t splits = 0;
  auto worst_total = [&]() {
    double w = 0.0;
    for (double t : totals) w = std::max(w, t);
    return w;
  };

  bool converged = false;
  for (;;) {
    if (worst_total() <= tol) {
      converged = true;
      break;
    }
    if (queue.empty() || cells.size() >= leaf_cap) break;
    const QueueEntry top = queue.top();
    queue.pop();
    CellRec& parent = cells[top.index];
    if (parent.depth >= cfg.max_depth) continue;  // frozen at depth cap

    const CellGeom pg = parent.g;
    parent.split = true;
    for (int ii = 0; ii < dim; ++ii) totals[static_cast<std::size_t>(ii)] -= parent.est[static_cast<std::size_t>(ii)];
    parent.val.clear();
    parent.val.shrink_to_fit();
    parent.est.clear();
    parent.est.shrink_to_fit();

    const double xm = 0.5 * (pg.x0 + pg.x1);
    const double ym = 0.5 * (pg.y0 + pg.y1);
    const int cd = parent.depth + 1;
    for (int cx = 0; cx < 2; ++cx) {
      for (int cy = 0; cy < 2; ++cy) {
        CellGeom g = pg;
        g.x0 = (cx == 0) ? pg.x0 : xm;
        g.x1 = (cx == 0) ? xm : pg.x1;
        g.y0 = (cy == 0) ? pg.y0 : ym;
        g.y1 = (cy == 0) ? ym : pg.y1;
        add_cell(g, cd);
        const CellRec& child = cells.back();
        for (int ii = 0; ii < dim; ++ii) totals[static_cast<std::size_t>(ii)] += child.est[static_cast<std::size_t>(ii)];
      }
    }
    if (++splits % 512 == 0) recompute_totals();
  }

  recompute_totals();
  std::vector<const CellRec*> leaves;
  leaves.reserve(cells.size());
  for (const auto& rec : cells)
    if (!rec.split) leaves.push_back(&rec);
  // cells is append-only, so leaves are already in id order

  BatchResult out;
  out.values.resize(static_cast<std::size_t>(dim));
  out.error_bounds = totals;
  out.evaluations = ctx.evals;
  for (int i = 0; i < dim; ++i)
    out.values[static_cast<std::size_t>(i)] = pairwise_component(leaves, i, 0, leaves.size());

  if (!converged && worst_total() > tol) {
    int worst_i = 0;
    for (int i = 1; i < dim; ++i)
      if (totals[static_cast<std::size_t>(i)] > totals[static_cast<std::size_t>(worst_i)]) worst_i = i;
    std::ostringstream msg;
    msg << "quadrature tolerance " << tol << " not met; worst component " << worst_i
        << " has error bound " << totals[static_cast<std::size_t>(worst_i)];
    throw ToleranceNotMet(msg.str(), out.values[static_cast<std::size_t>(worst_i)],
                          totals[static_cast<std::size_t>(worst_i)]);
  }
  return out;
}

Complex integrate_disk(const Integrand& f, const WeightSpec* spec,
                       const QuadConfig& cfg) {
  BatchIntegrand wrap = [&f](Complex z, std::span<Complex> out) { out[0] = f(z); };
  return integrate_disk_batch(1, wrap, spec, {}, cfg).values[0];
}

Complex inner_product(const Integrand& f, const Integrand& g, Measure measure,
                      const WeightSpec& spec, const QuadConfig& cfg) {
  if (measure == Measure::weighted_over_qstar_sq) {
    const ComplexPoly q_star = reverse(from_roots(spec.roots()), spec.size());
    BatchIntegrand wrap = [&](Complex z, std::span<Complex> out) {
      out[0] = f(z) * std::conj(g(z)) / std::norm(q_star(z));
    };
    return integrate_disk_batch(1, wrap, &spec, {}, cfg).values[0];
  }
  BatchIntegrand wrap = [&](Complex z, std::span<Complex> out) {
    out[0] = f(z) * std::conj(g(z));
  };
  const WeightSpec* sp = (measure == Measure::plain) ? nullptr : &spec;
  return integrate_disk_batch(1, wrap, sp, {}, cfg).values[0];
}

double norm_p(const Integrand& f, double p, const QuadConfig& cfg,
              std::span<const GradeHint> hints) {
  if (!(p > 0.0)) throw DomainViolation("norm exponent must be positive");
  BatchIntegrand wrap = [&](Complex z, std::span<Complex> out) {
    out[0] = Complex(std::pow(std::abs(f(z)), p), 0.0);
  };
  const Complex val = integrate_disk_batch(1, wrap, nullptr, hints, cfg).values[0];
  return std::pow(std::max(val.real(), 0.0), 1.0 / p);
}

}  // namespace bergkern
