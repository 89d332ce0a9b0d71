#include "gonal/cli/job.hpp"

#include "gonal/classify/classify.hpp"
#include "gonal/genus5/genus5.hpp"
#include "gonal/genus6/genus6.hpp"
#include "gonal/mpoly/parse.hpp"
#include "gonal/radical/radical.hpp"
#include "gonal/resolution/resolution.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace gonal {

namespace {

using json = Report;

// Thrown by a stage that cannot continue for a mathematical reason that is
// not an error (e.g. a stratum without a degree-4 construction).
struct Skip {
  std::string reason;
};

json polys_json(const std::vector<MPoly>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f.to_string());
  return a;
}

json scalars_json(const FieldPtr& k, const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(k->to_string(s));
  return a;
}

json field_json(const FieldPtr& k) {
  json f;
  f["name"] = k->describe();
  f["degree"] = k->absolute_degree();
  if (k->is_extension()) {
    f["generator"] = k->generator_name();
    f["minimal_polynomial"] = scalars_json(k->base(), k->minpoly());
  }
  return f;
}

json point_json(const SolutionPoint& p) {
  json j;
  j["field"] = field_json(p.field);
  j["orbit_size"] = p.orbit_size();
  if (p.orbit_size() > 1) j["minimal_polynomial"] = p.eliminant_factor.to_string();
  j["coords"] = scalars_json(p.field, p.coords);
  j["multiplicity"] = p.multiplicity;
  return j;
}

json upoly_coeffs(const UPoly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(p.field()->serialize(p.coeffs()[i]));
  return a;
}

json ratfun_json(const RatFun& f) {
  json j;
  j["text"] = f.to_string();
  j["num"] = upoly_coeffs(f.num());
  j["den"] = upoly_coeffs(f.den());
  return j;
}

std::string op_name(RadicalOp op) {
  switch (op) {
    case RadicalOp::Leaf: return "leaf";
    case RadicalOp::Zeta: return "zeta";
    case RadicalOp::Add: return "+";
    case RadicalOp::Sub: return "-";
    case RadicalOp::Mul: return "*";
    case RadicalOp::Div: return "/";
    case RadicalOp::Pow: return "^";
    case RadicalOp::Sqrt: return "sqrt";
    case RadicalOp::Cbrt: return "cbrt";
    case RadicalOp::Coupled: return "coupled";
  }
  throw Error("radical: bad node");
}

json tree_body(const RadicalExpr& e);

json tree_ref(const RadicalExpr& e) {
  if (!e->name.empty()) return json{{"ref", e->name}};
  return tree_body(e);
}

json tree_body(const RadicalExpr& e) {
  json j;
  j["op"] = op_name(e->op);
  if (e->op == RadicalOp::Leaf) {
    j["value"] = ratfun_json(e->value);
    return j;
  }
  if (e->op == RadicalOp::Pow) j["exponent"] = e->index;
  if (e->op == RadicalOp::Sqrt || e->op == RadicalOp::Cbrt) j["branch"] = e->index;
  json args = json::array();
  for (const auto& a : e->args) args.push_back(tree_ref(a));
  j["args"] = args;
  return j;
}

// Definitions of named inner nodes, in dependency order, with trees.
void collect_definitions(const RadicalExpr& e, bool root, std::vector<RadicalExpr>& out) {
  for (const auto& a : e->args) collect_definitions(a, false, out);
  if (root || e->name.empty() || e->op == RadicalOp::Leaf) return;
  for (const auto& d : out) {
    if (d->name == e->name) return;
  }
  out.push_back(e);
}

MPoly dehomogenize(const MPoly& F, const RingPtr& affine) {
  return F.compose({MPoly::var(affine, 0), MPoly::var(affine, 1), MPoly::from_int(affine, 1)});
}

struct Pencil {
  MPoly num, den;
  std::string source;
};

// A degree-4 pencil on a plane model with only nodes: conics through the
// nodes when they form a pencil, otherwise lines through a rational node.
Pencil plane_pencil(const MPoly& F, const std::vector<PlaneSingularity>& sing) {
  const RingPtr& plane = F.ring();
  std::vector<SolutionPoint> pts;
  for (const auto& s : sing) pts.push_back(s.point);
  if (!pts.empty()) {
    auto conics = conics_through(pts, plane);
    int count = 0;
    for (const auto& p : pts) count += p.orbit_size();
    if (conics.size() == 2 && 12 - 2 * count == 4) return {conics[0], conics[1], "conics through the singular points"};
  }
  const FieldPtr& k = plane->field();
  for (const auto& p : pts) {
    if (p.orbit_size() != 1) continue;
    // Two independent linear forms vanishing at p.
    Mat row(k, 1, 3);
    for (int i = 0; i < 3; ++i) row.at(0, i) = p.field->is_extension() ? k->zero() : p.coords[i];
    Mat ker = row.kernel();
    if (ker.rows() != 2) continue;
    std::vector<MPoly> lines;
    for (int r = 0; r < 2; ++r) {
      MPoly l(plane);
      for (int i = 0; i < 3; ++i) l += MPoly::var(plane, i).scale(ker.at(r, i));
      lines.push_back(l);
    }
    return {lines[0], lines[1], "lines through a rational singular point"};
  }
  throw Skip{"no pencil of degree 4 defined over the base field on the plane model"};
}

json radical_section(const FieldPresentation& fp, int samples, std::uint64_t seed) {
  json j;
  j["curve"] = fp.curve.to_string();
  j["parameter"] = {{"num", fp.t_num.to_string()}, {"den", fp.t_den.to_string()}};
  j["relation"] = fp.relation.to_string();
  j["degree"] = fp.degree();
  j["y"] = {{"num", fp.y_num.to_string()}, {"den", fp.y_den.to_string()}};
  auto coeffs = coefficients_in_x(fp.relation);
  auto roots = solve_by_radicals(coeffs);
  if (fp.degree() == 4) {
    json q;
    for (const auto& [name, v] : quartic_quantities(coeffs)) q[name] = ratfun_json(v);
    j["quantities"] = q;
  }
  json leaves;
  std::vector<RadicalExpr> defs;
  for (const auto& r : roots) {
    for (const auto& [name, v] : named_leaves(r)) leaves[name] = ratfun_json(v);
    collect_definitions(r, true, defs);
  }
  j["leaves"] = leaves;
  json dj = json::array();
  for (const auto& d : defs) dj.push_back({{"name", d->name}, {"prefix", to_prefix(named(d, ""))}, {"tree", tree_body(d)}});
  j["definitions"] = dj;
  json rj = json::array();
  for (const auto& r : roots) rj.push_back({{"prefix", to_prefix(r)}, {"tree", tree_body(r)}});
  j["roots"] = rj;
  NumericReport nr = verify_numeric(roots, coeffs, samples, seed);
  j["numeric"] = {{"samples", nr.samples},
                  {"max_residual", nr.max_residual},
                  {"vieta_sum_defect", nr.vieta_sum_defect},
                  {"vieta_product_defect", nr.vieta_product_defect},
                  {"max_coupling_defect", nr.max_coupling_defect},
                  {"ok", nr.ok(1e-6)}};
  return j;
}

// Stages each command needs, before --stop-after.
std::vector<std::string> plan_for(const std::string& command, int nvars) {
  if (nvars == 2) {
    if (command != "radical" && command != "full") throw Error("plane-curve input is only accepted by `radical`");
    return {"parse", "radical"};
  }
  if (command == "classify") return {"parse", "classify"};
  if (command == "betti") return {"parse", "betti"};
  std::vector<std::string> p{"parse", "classify", "betti"};
  if (nvars == 6) {
    p.insert(p.end(), {"surface", "scrolls"});
  } else {
    p.push_back("quintic");
  }
  p.push_back("gonal");
  if (command == "gonal") return p;
  p.push_back("plane-model");
  if (command == "plane-model") return p;
  if (command == "radical" || command == "full") {
    p.push_back("radical");
    return p;
  }
  throw Error("unknown command '" + command + "'");
}

const std::vector<std::string> kCommands{"classify", "betti", "gonal", "plane-model", "radical", "full"};

}  // namespace

const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> names{"parse",   "classify", "betti", "surface",     "scrolls",
                                              "quintic", "gonal",    "plane-model", "radical"};
  return names;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::pair<std::vector<int>, std::vector<int>> parse_patch(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw Error("--patch expects <F-pivots>,<G-pivots>, e.g. 012,34");
  auto digits = [](const std::string& s, std::size_t want) {
    std::vector<int> out;
    for (char c : s) {
      if (c < '0' || c > '4') throw Error("--patch: pivot columns are digits 0..4");
      out.push_back(c - '0');
    }
    std::vector<int> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (out.size() != want || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("--patch: expected " + std::to_string(want) + " distinct pivot columns in '" + s + "'");
    }
    return sorted;
  };
  return {digits(spec.substr(0, comma), 3), digits(spec.substr(comma + 1), 2)};
}

Report run_job(const JobSpec& job) {
  if (std::find(kCommands.begin(), kCommands.end(), job.command) == kCommands.end()) {
    throw Error("unknown command '" + job.command + "'");
  }
  if (!job.stop_after.empty() &&
      std::find(stage_names().begin(), stage_names().end(), job.stop_after) == stage_names().end()) {
    throw Error("unknown stage '" + job.stop_after + "'");
  }
  if (job.jobs < 1) throw Error("--jobs must be positive");
  if (job.samples < 1) throw Error("--samples must be positive");

  json rep;
  rep["schema_version"] = kReportSchemaVersion;
  rep["command"] = job.command;
  rep["input_hash"] = "fnv1a64:" + fnv1a_hex(job.input);
  rep["seed"] = job.seed;
  json stages = json::object();
  json timings;
  std::vector<std::string> plan{"parse"};
  std::string current;
  bool halted = false;

  // Runs one stage if it is planned; returns false once the job stops.
  auto stage = [&](const std::string& name, const std::function<void(json&)>& body) {
    if (halted) return false;
    if (std::find(plan.begin(), plan.end(), name) == plan.end()) return true;
    current = name;
    json out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(out);
    } catch (const Skip& s) {
      rep["skipped"] = {{"stage", name}, {"reason", s.reason}};
      halted = true;
    } catch (const std::exception& e) {
      rep["error"] = {{"stage", name}, {"message", e.what()}};
      halted = true;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (job.timings) timings[name] = secs;
    if (!out.is_null()) stages[name] = out;
    if (!halted && name == job.stop_after) {
      rep["stopped_after"] = name;
      halted = true;
    }
    return !halted;
  };

  IdealText in;
  std::optional<Ideal> ideal;
  int genus = 0;
  stage("parse", [&](json& out) {
    std::string text = job.input;
    if (job.field) {
      // The override replaces the file's own field header.
      std::istringstream is(job.input);
      std::ostringstream os;
      std::string line;
      while (std::getline(is, line)) {
        const auto p = line.find_first_not_of(" \t");
        if (p != std::string::npos && line.compare(p, 6, "field:") == 0) continue;
        os << line << "\n";
      }
      text = "field: " + *job.field + "\n" + os.str();
    }
    in = parse_ideal_text(text);
    const int n = in.ring->nvars();
    if (n != 2 && n != 5 && n != 6) {
      throw Error("expected 5 variables (genus 5) or 6 variables (genus 6), got " + std::to_string(n));
    }
    plan = plan_for(job.command, n);
    if (!job.stop_after.empty() && std::find(plan.begin(), plan.end(), job.stop_after) == plan.end()) {
      throw Error("stage '" + job.stop_after + "' is not part of `" + job.command + "` for this input");
    }
    genus = n == 2 ? 0 : n;
    if (n == 2 && !job.parameter) throw Error("plane-curve input needs --parameter NUM,DEN");
    out["field"] = field_json(in.ring->field());
    out["vars"] = in.ring->vars();
    out["generators"] = polys_json(in.polys);
    if (genus) {
      out["genus"] = genus;
      ideal = Ideal(in.ring, in.polys);
    }
  });

  // Shared state between stages; the ideal exists past "parse".
  auto curve = [&]() -> const Ideal& { return *ideal; };
  std::optional<Classification> cls;
  std::optional<Resolution> res;
  std::optional<SummandData> summand;
  std::optional<ScrollSearch> search;
  std::optional<QuadricNet> net;
  std::optional<SingularQuadric> sq;
  std::optional<RationalMap> pencil;
  std::optional<MPoly> plane_curve;
  std::vector<PlaneSingularity> plane_sing;
  Stratum stratum = Stratum::NotCanonicalInput;

  stage("classify", [&](json& out) {
    cls = classify(curve(), genus);
    stratum = cls->stratum;
    out["stratum"] = to_string(stratum);
    out["degree"] = cls->sanity.degree;
    out["arithmetic_genus"] = cls->sanity.genus;
    out["dimension"] = cls->sanity.dim;
    json gd = json::array();
    for (const auto& [d, n] : cls->generator_degrees) gd.push_back({{"degree", d}, {"count", n}});
    out["generator_degrees"] = gd;
    if (cls->lie) {
      out["lie_algebra"] = {{"dimension", cls->lie->dimension},
                            {"derived_series", cls->lie->derived_series},
                            {"soluble", cls->lie->is_soluble}};
    }
  });

  stage("betti", [&](json& out) {
    res = minimal_resolution(curve());
    out["compact"] = res->betti.compact();
    out["table"] = res->betti.to_string();
    json mods = json::array();
    for (const auto& m : res->maps) mods.push_back(m.source.to_string());
    out["modules"] = mods;
  });

  auto require_generic = [&] {
    if (stratum == Stratum::NotCanonicalInput) throw Skip{"input is not a canonical curve of genus " + std::to_string(genus)};
    if (stratum != Stratum::Genus5Generic && stratum != Stratum::Genus6Generic && stratum != Stratum::Genus6DelPezzo) {
      throw Skip{"stratum " + to_string(stratum) + " has no degree-4 construction"};
    }
  };

  stage("surface", [&](json& out) {
    require_generic();
    summand = rank5_summand(phi_matrix(*res), first_generators(*res));
    out["ideal"] = polys_json(summand->surface.gens());
    ConeTest cone = elliptic_cone_test(summand->surface, job.seed);
    out["elliptic_cone"] = cone.is_cone;
    out["singular_locus_finite"] = cone.singular_locus_finite;
    json sp = json::array();
    for (const auto& p : cone.singular_points) sp.push_back(point_json(p));
    out["singular_points"] = sp;
    if (cone.is_cone) {
      stratum = Stratum::Genus6EllipticCone;
      out["apex"] = scalars_json(in.ring->field(), cone.apex);
      if (cone.base_curve) out["base_curve"] = polys_json(cone.base_curve->gens());
      if (cone.projection) out["projection"] = polys_json(cone.projection->forms);
    } else {
      stratum = Stratum::Genus6DelPezzo;
    }
    out["stratum"] = to_string(stratum);
  });

  stage("scrolls", [&](json& out) {
    ScrollSearchOptions opts;
    opts.jobs = job.jobs;
    opts.seed = job.seed;
    opts.only_patch = job.patch;
    if (job.patch) opts.stop_at = 0;
    search = all_scrolls(summand->m5, opts);
    out["patches_tried"] = search->patches_tried;
    out["infinite_family"] = search->infinite_family;
    out["geometric_count"] = search->geometric_count();
    json orbits = json::array();
    for (const auto& s : search->scrolls) {
      json o;
      o["orbit_size"] = s.orbit_size;
      o["field"] = field_json(s.field);
      o["eliminant"] = s.eliminant.to_string();
      o["patch"] = {{"f", s.f_pivots}, {"g", s.g_pivots}};
      json t = json::array();
      for (int i = 0; i < s.t_sol.rows(); ++i) t.push_back(polys_json(s.t_sol.row(i)));
      o["matrix"] = t;
      o["minors"] = polys_json(s.minors);
      orbits.push_back(o);
    }
    out["orbits"] = orbits;
    if (search->infinite_family) {
      throw Skip{"infinitely many degree-4 pencils: the curve lies on an elliptic cone and its pencils factor "
                 "through the base curve"};
    }
  });

  stage("quintic", [&](json& out) {
    require_generic();
    net = quadric_net(curve());
    MPoly F = determinant_quintic(*net);
    out["determinant_quintic"] = F.to_string();
    sq = find_singular_quadric(F, *net, job.seed);
    out["field"] = field_json(sq->field);
    out["point"] = scalars_json(sq->field, sq->point);
    out["quadric"] = sq->quadric.to_string();
    out["rank"] = sq->rank;
    json v = json::array();
    for (const auto& p : sq->vertex) v.push_back(scalars_json(sq->field, p));
    out["vertex"] = v;
  });

  stage("gonal", [&](json& out) {
    if (genus == 6) {
      const ScrollPresentation* chosen = nullptr;
      for (const auto& s : search->scrolls) {
        if (s.orbit_size == 1) {
          chosen = &s;
          break;
        }
      }
      if (!chosen && !search->scrolls.empty()) chosen = &search->scrolls.front();
      if (!chosen) throw Error("no scroll found");
      pencil = gonal_function(*chosen, curve(), job.seed);
      out["scroll"] = static_cast<int>(chosen - search->scrolls.data());
      out["field"] = field_json(pencil->ring()->field());
      out["pencil"] = polys_json(pencil->forms);
      return;
    }
    Genus5GonalMap gm = gonal_map_genus5(*sq, curve(), job.seed);
    out["rank"] = gm.rank;
    out["field"] = field_json(gm.field);
    out["coords"] = polys_json(gm.coords);
    json maps = json::array();
    for (const auto& m : gm.maps) maps.push_back(polys_json(m.forms));
    out["maps"] = maps;
  });

  stage("plane-model", [&](json& out) {
    std::optional<MPoly> image_opt;
    if (genus == 6) {
      auto hyper = residual_hyperplanes(*pencil, curve());
      Genus6PlaneModel pm = plane_model6(*pencil, curve(), hyper, job.seed);
      out["hyperplanes"] = polys_json(hyper);
      out["map"] = polys_json(pm.map.forms);
      out["equation"] = pm.image.to_string();
      out["degree"] = pm.image_degree;
      out["map_degree"] = pm.map_degree;
      image_opt = pm.image;
    } else {
      Genus5PlaneModel pm = plane_model6_genus5(curve(), std::nullopt, nullptr, job.seed);
      out["field"] = field_json(pm.field);
      out["centre"] = {scalars_json(pm.field, pm.p), scalars_json(pm.field, pm.q)};
      out["map"] = polys_json(pm.map.forms);
      out["equation"] = pm.image.to_string();
      out["degree"] = pm.image_degree;
      out["map_degree"] = pm.map_degree;
      out["bielliptic"] = pm.bielliptic;
      image_opt = pm.image;
    }
    const MPoly& image = *image_opt;
    if (image.total_degree() == 6 && !image.field()->is_extension()) {
      plane_sing = plane_singularities(image, job.seed);
      json sp = json::array();
      for (const auto& s : plane_sing) {
        json p = point_json(s.point);
        p["node"] = s.is_node();
        sp.push_back(p);
      }
      out["singular_points"] = sp;
    }
    plane_curve = image;
  });

  stage("radical", [&](json& out) {
    const FieldPtr& k = genus ? plane_curve->field() : in.ring->field();
    if (!k->is_rationals()) throw Skip{"radical expressions are only computed over Q"};
    if (genus == 0) {
      if (in.polys.size() != 1) throw Error("plane-curve input must be a single polynomial");
      const MPoly& f = in.polys[0];
      const RingPtr& r = in.ring;
      FieldPresentation fp =
          present(f, parse_poly(r, job.parameter->first), parse_poly(r, job.parameter->second));
      out = radical_section(fp, job.samples, job.seed);
      out["parameter_source"] = "user";
      return;
    }
    if (plane_curve->total_degree() != 6) throw Skip{"plane model is not a sextic"};
    Pencil p = plane_pencil(*plane_curve, plane_sing);
    auto affine = PolyRing::make(k, {"X", "Y"});
    FieldPresentation fp = present(dehomogenize(*plane_curve, affine), dehomogenize(p.num, affine),
                                   dehomogenize(p.den, affine));
    out = radical_section(fp, job.samples, job.seed);
    out["parameter_source"] = p.source;
  });

  if (cls) rep["stratum"] = to_string(stratum);
  rep["stages"] = stages;
  if (job.timings) rep["timings"] = timings;
  return rep;
}

namespace {

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const std::string key = j.is_object() ? it.key() + ":" : "-";
    if (v.is_primitive()) {
      const std::string s = scalar(v);
      if (s.find('\n') == std::string::npos) {
        os << pad << key << " " << s << "\n";
      } else {
        os << pad << key << "\n";
        std::istringstream lines(s);
        std::string line;
        while (std::getline(lines, line)) os << pad << "    " << line << "\n";
      }
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
      std::string line;
      for (const auto& e : v) line += (line.empty() ? "" : ", ") + scalar(e);
      if (line.size() + pad.size() + key.size() < 100) {
        os << pad << key << " [" << line << "]\n";
      } else {
        os << pad << key << "\n";
        for (const auto& e : v) os << pad << "  - " << scalar(e) << "\n";
      }
    } else {
      os << pad << key << "\n";
      render(os, v, indent + 2);
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

int exit_status(const Report& report) { return report.contains("error") ? 2 : 0; }

}  // namespace gonal
