#include "steinberg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "steinberg/catalog.hpp"
#include "steinberg/equivariant.hpp"
#include "steinberg/io.hpp"

namespace steinberg::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invalid : std::runtime_error {
  Invalid(const std::string& what, Violations vs) : std::runtime_error(what), violations(std::move(vs)) {}
  Violations violations;
};

struct Options {
  std::string ring;
  std::string involution;
  std::string cocycle;
  std::string groupoid;
  std::string grading;
  std::string section;
  std::string out;
  std::string mode = "exhaustive";
  std::uint64_t cap = kDefaultExhaustiveCap;
  std::vector<std::string> files;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string resolve(const std::string& ref, const std::string& from) {
  const fs::path p(ref);
  if (p.is_absolute()) return ref;
  return (fs::path(from).parent_path() / p).lexically_normal().string();
}

void require_valid(const Violations& vs, const std::string& what) {
  if (!vs.empty()) throw Invalid(what + " is invalid", vs);
}

const char* flag(bool b) { return b ? "true" : "false"; }

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const std::string& text) const {
    if (o_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o_.out);
    f << text;
  }

  /// A path to the groupoid as seen from wherever the output lands.
  std::string groupoid_ref() const {
    if (gpd_path_.empty()) throw UsageError("no groupoid file known");
    if (o_.out.empty()) return gpd_path_;
    const auto dir = fs::absolute(o_.out).parent_path();
    return fs::relative(fs::absolute(gpd_path_), dir).string();
  }

  std::shared_ptr<const FiniteGroupoid> groupoid(const std::string& positional = {},
                                                 const std::vector<std::string>& referrers = {}) {
    if (gpd_) return gpd_;
    std::string path = o_.groupoid.empty() ? positional : o_.groupoid;
    std::vector<std::string> candidates = referrers;
    if (!o_.cocycle.empty()) candidates.push_back(o_.cocycle);
    if (!o_.grading.empty()) candidates.push_back(o_.grading);
    for (const auto& f : candidates) {
      if (!path.empty()) break;
      if (auto ref = referenced_groupoid(slurp(f))) path = resolve(*ref, f);
    }
    if (path.empty()) throw UsageError("no groupoid: pass --groupoid or reference one from an input file");
    auto g = std::make_shared<const FiniteGroupoid>(read_groupoid(slurp(path)));
    require_valid(validate_groupoid(*g), "groupoid " + path);
    gpd_path_ = path;
    gpd_ = g;
    return gpd_;
  }

  Ring ring(const std::vector<std::string>& files) const {
    std::string spec = o_.ring;
    for (const auto& f : files) {
      if (!spec.empty()) break;
      if (auto r = referenced_ring(slurp(f))) spec = *r;
    }
    if (spec.empty()) return Ring::rationals();
    try {
      return Ring::parse(spec);
    } catch (const Error& e) {
      throw UsageError(std::string("bad ring: ") + e.what());
    }
  }

  std::optional<Involution> involution(bool required) const {
    if (o_.involution.empty()) return required ? std::optional(Involution::identity()) : std::nullopt;
    try {
      return Involution::parse(o_.involution);
    } catch (const Error& e) {
      throw UsageError(std::string("bad involution: ") + e.what());
    }
  }

  TwoCocycle cocycle(const std::shared_ptr<const FiniteGroupoid>& g, const std::string& path) const {
    auto s = read_cocycle(slurp(path), g);
    require_valid(validate_cocycle(s), "cocycle " + path);
    return s;
  }

  Grading grading(const std::shared_ptr<const FiniteGroupoid>& g) const {
    if (o_.grading.empty()) throw UsageError("--grading is required");
    auto c = read_grading(slurp(o_.grading), g);
    require_valid(validate_grading(c), "grading " + o_.grading);
    return c;
  }

  std::shared_ptr<const AlgebraContext> context(const std::vector<std::string>& ring_files, bool need_star = false,
                                                const std::string& positional_gpd = {}) {
    auto g = groupoid(positional_gpd, ring_files);
    TwoCocycle s = o_.cocycle.empty() ? TwoCocycle(g, 1) : cocycle(g, o_.cocycle);
    return AlgebraContext::create(std::move(s), ring(ring_files), involution(need_star));
  }

  DiscreteTwist twist(const std::string& path) {
    auto base = groupoid({}, {path});
    auto t = read_twist(slurp(path), base);
    require_valid(validate_twist(t), "twist " + path);
    return t;
  }

  GlobalSection section(const DiscreteTwist& t) const {
    if (o_.section.empty()) return find_section(t);
    auto p = read_section(slurp(o_.section), t);
    require_valid(validate_section(t, p), "section " + o_.section);
    return p;
  }

  const Options& options() const { return o_; }
  std::ostream& out() const { return out_; }

 private:
  const Options& o_;
  std::ostream& out_;
  std::shared_ptr<const FiniteGroupoid> gpd_;
  std::string gpd_path_;
};

void arity(const Options& o, std::size_t lo, std::size_t hi) {
  const auto n = o.files.size();
  if (n < lo || n > hi) {
    if (lo == hi) throw UsageError("expected " + std::to_string(lo) + " file argument(s), got " + std::to_string(n));
    throw UsageError("expected " + std::to_string(lo) + " to " + std::to_string(hi) + " file arguments, got " +
                     std::to_string(n));
  }
}

std::vector<AlgebraElement> elements(const std::shared_ptr<const AlgebraContext>& ctx,
                                     const std::vector<std::string>& files) {
  std::vector<AlgebraElement> fs;
  for (const auto& f : files) fs.push_back(read_element(slurp(f), ctx));
  return fs;
}

std::string unit_names(const FiniteGroupoid& g, const std::vector<Arrow>& units) {
  std::string s;
  for (Arrow x : units) s += (s.empty() ? "" : " ") + g.name(x);
  return s;
}

int cmd_validate(Session& s, const std::string& kind) {
  const auto& o = s.options();
  arity(o, 1, 1);
  const auto& path = o.files[0];
  Violations vs;
  if (kind == "groupoid") {
    vs = validate_groupoid(read_groupoid(slurp(path)));
  } else if (kind == "cocycle") {
    vs = validate_cocycle(read_cocycle(slurp(path), s.groupoid({}, {path})));
  } else if (kind == "twist") {
    vs = validate_twist(read_twist(slurp(path), s.groupoid({}, {path})));
  } else {
    vs = validate_grading(read_grading(slurp(path), s.groupoid({}, {path})));
  }
  require_valid(vs, kind + " " + path);
  s.emit("valid: true\n");
  return 0;
}

int cmd_groupoid_fact(Session& s, const std::string& verb) {
  arity(s.options(), 1, 1);
  const auto g = s.groupoid(s.options().files[0]);
  std::ostringstream os;
  if (verb == "orbits") {
    const auto orb = orbits(*g);
    os << "orbits " << orb.size() << "\n";
    for (const auto& o : orb) os << "orbit " << unit_names(*g, o) << "\n";
  } else if (verb == "effective") {
    os << "effective: " << flag(is_effective(*g)) << "\n";
  } else {
    os << "minimal: " << flag(is_minimal(*g)) << "\n";
  }
  s.emit(os.str());
  return 0;
}

int cmd_mul(Session& s) {
  const auto& o = s.options();
  arity(o, 2, 2);
  auto ctx = s.context(o.files);
  const auto fs = elements(ctx, o.files);
  s.emit(write_element(fs[0] * fs[1]));
  return 0;
}

int cmd_star(Session& s) {
  const auto& o = s.options();
  arity(o, 1, 1);
  auto ctx = s.context(o.files, true);
  s.emit(write_element(involute(elements(ctx, o.files)[0])));
  return 0;
}

int cmd_decompose(Session& s) {
  const auto& o = s.options();
  arity(o, 1, 1);
  auto ctx = s.context(o.files);
  s.emit(write_decomposition(*ctx, disjoint_decomposition(elements(ctx, o.files)[0])));
  return 0;
}

int cmd_cohomologous(Session& s) {
  const auto& o = s.options();
  arity(o, 2, 2);
  auto g = s.groupoid({}, o.files);
  const auto a = s.cocycle(g, o.files[0]);
  const auto b = s.cocycle(g, o.files[1]);
  if (a.order() != b.order()) throw Error("cocycles have different orders");
  const auto cob = check_cohomologous(a, b);
  std::string text = std::string("cohomologous: ") + flag(cob.has_value()) + "\n";
  if (cob) text += write_coboundary(*cob);
  s.emit(text);
  return 0;
}

int cmd_twist(Session& s, const std::string& sub) {
  const auto& o = s.options();
  if (sub == "build") {
    arity(o, 1, 2);
    const std::string coc = o.files.back();
    auto g = s.groupoid(o.files.size() == 2 ? o.files[0] : std::string{}, {coc});
    s.emit(write_twist(build_twist(s.cocycle(g, coc)), s.groupoid_ref()));
  } else if (sub == "section") {
    arity(o, 1, 1);
    const auto t = s.twist(o.files[0]);
    s.emit(write_section(t, find_section(t)));
  } else if (sub == "induced") {
    arity(o, 1, 1);
    const auto t = s.twist(o.files[0]);
    s.emit(write_cocycle(induced_cocycle(t, s.section(t)), s.groupoid_ref()));
  } else {
    arity(o, 2, 2);
    const auto a = s.twist(o.files[0]);
    const auto b = s.twist(o.files[1]);
    const auto m = twists_isomorphic(a, b);
    std::string text = std::string("isomorphic: ") + flag(m.has_value()) + "\n";
    if (m) text += write_morphism(a, b, *m);
    s.emit(text);
  }
  return 0;
}

int cmd_psi(Session& s) {
  const auto& o = s.options();
  arity(o, 2, 2);
  auto t = s.twist(o.files[0]);
  auto p = s.section(t);
  const Ring ring = s.ring({o.files[1]});
  auto ctx = EquivariantContext::create(std::move(t), std::move(p), ring, s.involution(false));
  const auto values = read_function(slurp(o.files[1]), ctx->twist().total(), ring);
  s.emit(write_element(psi(from_total_function(ctx, values))));
  return 0;
}

int cmd_grade(Session& s) {
  const auto& o = s.options();
  arity(o, 1, 1);
  auto ctx = s.context(o.files);
  const auto c = s.grading(ctx->cocycle().groupoid_ptr());
  s.emit(write_components(*ctx, c, graded_components(elements(ctx, o.files)[0], c)));
  return 0;
}

int cmd_ideal(Session& s, const std::string& sub) {
  const auto& o = s.options();
  if (sub == "gen") {
    arity(o, 1, 1000000);
    auto ctx = s.context(o.files);
    const auto fs = elements(ctx, o.files);
    s.emit(write_ideal(ideal_generated(ctx, fs)));
  } else {
    arity(o, 2, 2);
    auto ctx = s.context(o.files);
    const auto ideal = read_ideal(slurp(o.files[0]), ctx);
    const auto f = read_element(slurp(o.files[1]), ctx);
    s.emit(std::string("member: ") + flag(ideal_member(ideal, f)) + "\n");
  }
  return 0;
}

int cmd_witness(Session& s, bool graded) {
  const auto& o = s.options();
  arity(o, 1, 1000000);
  auto ctx = s.context(o.files);
  const auto ideal = ideal_generated(ctx, elements(ctx, o.files));
  std::vector<Arrow> v;
  if (graded) {
    const auto c = s.grading(ctx->cocycle().groupoid_ptr());
    v = graded_ck_witness(ideal, c);
  } else {
    v = ck_witness(ideal);
  }
  s.emit("witness: " + unit_names(ctx->groupoid(), v) + "\n");
  return 0;
}

int cmd_simple(Session& s) {
  const auto& o = s.options();
  arity(o, 0, 1);
  auto ctx = s.context({}, false, o.files.empty() ? std::string{} : o.files[0]);
  const auto mode = o.mode == "structural" ? SimplicityMode::Structural : SimplicityMode::Exhaustive;
  const auto r = is_simple(ctx, mode, o.cap);
  std::string text = "simple: " + to_string(r.verdict) + "\n";
  if (!r.reason.empty()) text += "reason: " + r.reason + "\n";
  if (!r.invariant_units.empty()) text += "units: " + unit_names(ctx->groupoid(), r.invariant_units) + "\n";
  if (r.generator) text += write_element(*r.generator);
  if (r.proper_ideal) text += write_ideal(*r.proper_ideal);
  s.emit(text);
  return 0;
}

std::string file_stem(const std::string& name) {
  std::string s = name;
  for (char& c : s)
    if (c == '+') c = '_';
  return s;
}

int cmd_catalog(Session& s, const std::string& sub) {
  const auto& o = s.options();
  if (sub == "list") {
    arity(o, 0, 0);
    std::ostringstream os;
    for (const auto& e : catalog()) {
      os << e.name << " dim " << e.facts.dimension;
      for (const auto& [n, _] : e.cocycles) os << " cocycle:" << n;
      for (const auto& [n, _] : e.gradings) os << " grading:" << n;
      os << " # " << e.description << "\n";
    }
    s.out() << os.str();
    return 0;
  }
  arity(o, 1, 1);
  const auto& e = catalog_entry(o.files[0]);
  const std::string stem = file_stem(e.name);
  if (o.out.empty()) {
    s.out() << write_groupoid(*e.groupoid);
    return 0;
  }
  const fs::path dir(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  auto put = [&](const std::string& file, const std::string& text) {
    std::ofstream f(dir / file, std::ios::binary);
    if (!f) throw UsageError("cannot write " + (dir / file).string());
    f << text;
    s.out() << (dir / file).string() << "\n";
  };
  put(stem + ".gpd", write_groupoid(*e.groupoid));
  for (const auto& [n, c] : e.cocycles) put(stem + "_" + n + ".coc", write_cocycle(c, stem + ".gpd"));
  for (const auto& [n, c] : e.gradings) put(stem + "_" + n + ".grd", write_grading(c, stem + ".gpd"));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic in twisted Steinberg algebras of finite groupoids", "steinberg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--ring", o.ring, "Coefficient ring: Z, Q, GF(p), GF(p^2), Q(zeta_n), Z/p");
  app.add_option("--involution", o.involution, "id, conj or frobenius");
  app.add_option("--cocycle", o.cocycle, "Cocycle file (default: trivial)");
  app.add_option("--groupoid", o.groupoid, "Groupoid file");
  app.add_option("--grading", o.grading, "Grading file");
  app.add_option("--section", o.section, "Section file (default: least-index section)");
  app.add_option("--out", o.out, "Output file, or directory for catalog emit");
  app.add_option("--cap", o.cap, "Limit for exhaustive searches");
  app.add_option("--mode", o.mode, "Simplicity mode")->check(CLI::IsMember({"exhaustive", "structural"}));

  std::string verb;
  std::string sub;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& files_help) {
    auto* c = parent->add_subcommand(name, help);
    c->add_option("files", o.files, files_help);
    c->callback([&, c, parent] {
      if (parent == &app) {
        verb = c->get_name();
      } else {
        verb = parent->get_name();
        sub = c->get_name();
      }
    });
    return c;
  };
  auto* validate = app.add_subcommand("validate", "Check axioms of an input file")->require_subcommand(1);
  leaf(validate, "groupoid", "", "GPD");
  leaf(validate, "cocycle", "", "COC");
  leaf(validate, "twist", "", "TWT");
  leaf(validate, "grading", "", "GRD");
  leaf(&app, "orbits", "Orbits of the unit space", "GPD");
  leaf(&app, "effective", "Is the groupoid effective", "GPD");
  leaf(&app, "minimal", "Is the groupoid minimal", "GPD");
  leaf(&app, "mul", "Twisted convolution F*G", "F G");
  leaf(&app, "star", "Involution F*", "F");
  leaf(&app, "decompose", "Disjoint bisection decomposition", "F");
  leaf(&app, "cohomologous", "Coboundary relating two cocycles", "A B");
  auto* twist = app.add_subcommand("twist", "Discrete twists")->require_subcommand(1);
  leaf(twist, "build", "Twist G x_s T of a cocycle", "[GPD] COC");
  leaf(twist, "section", "A global section", "TWT");
  leaf(twist, "induced", "Cocycle induced by a section", "TWT");
  leaf(twist, "iso", "Isomorphism of twists", "A B");
  leaf(&app, "psi", "Equivariant function on a twist to the cocycle algebra", "TWT F");
  leaf(&app, "grade", "Homogeneous components", "F");
  auto* ideal = app.add_subcommand("ideal", "Two-sided ideals")->require_subcommand(1);
  leaf(ideal, "gen", "Ideal generated by elements", "F...");
  leaf(ideal, "member", "Ideal membership", "IDEAL F");
  leaf(&app, "ck-witness", "Unit x with d_x in the ideal generated by F...", "F...");
  leaf(&app, "graded-witness", "Same for a graded ideal", "F...");
  leaf(&app, "simple", "Simplicity verdict", "[GPD]");
  auto* cat = app.add_subcommand("catalog", "Built-in examples")->require_subcommand(1);
  leaf(cat, "list", "", "");
  leaf(cat, "emit", "", "NAME");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Session s(o, out);
  try {
    if (verb == "validate") return cmd_validate(s, sub);
    if (verb == "orbits" || verb == "effective" || verb == "minimal") return cmd_groupoid_fact(s, verb);
    if (verb == "mul") return cmd_mul(s);
    if (verb == "star") return cmd_star(s);
    if (verb == "decompose") return cmd_decompose(s);
    if (verb == "cohomologous") return cmd_cohomologous(s);
    if (verb == "twist") return cmd_twist(s, sub);
    if (verb == "psi") return cmd_psi(s);
    if (verb == "grade") return cmd_grade(s);
    if (verb == "ideal") return cmd_ideal(s, sub);
    if (verb == "ck-witness") return cmd_witness(s, false);
    if (verb == "graded-witness") return cmd_witness(s, true);
    if (verb == "simple") return cmd_simple(s);
    if (verb == "catalog") return cmd_catalog(s, sub);
    throw UsageError("unknown verb");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Invalid& e) {
    err << e.what() << "\n";
    for (const auto& v : e.violations) err << "  " << to_string(v) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace steinberg::cli
