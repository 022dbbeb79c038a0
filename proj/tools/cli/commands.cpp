#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "oml/oml.hpp"

namespace oml::cli {

namespace {

// Each report line is a list of fields: space separated by default, tab
// separated with --tsv.
class Report {
public:
  Report(std::ostream &out, bool tsv) : out_(out), tsv_(tsv) {}

  std::ostream &raw() { return out_; }

  void line(const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i)
      out_ << (i > 0 ? (tsv_ ? "\t" : " ") : "") << fields[i];
    out_ << '\n';
  }

  void line(const std::string &label, const std::vector<Element> &values) {
    std::vector<std::string> fields{label};
    for (auto v : values)
      fields.push_back(std::to_string(v));
    line(fields);
  }

private:
  std::ostream &out_;
  bool tsv_;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw Error("cannot write " + path);
}

bool ends_with(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// .gre files are pasted on load; everything else is read as .oml.
FiniteOml load(const std::string &path, bool strict = false) {
  const std::string text = read_file(path);
  if (ends_with(path, ".gre"))
    return greechie_to_oml(parse_greechie(text, strict), {strict});
  return parse_oml(text);
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  if (text.empty())
    return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }
  return out;
}

std::vector<Element> parse_indices(const std::string &text,
                                   const FiniteOml &l) {
  std::vector<Element> out;
  for (const auto &token : split(text, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != token.size() || token[0] == '-')
      throw MalformedInput("bad element index '" + token + "'");
    l.check_element(static_cast<Element>(v));
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

std::map<Element, Rational> parse_pins(const std::string &text,
                                       const FiniteOml &l) {
  std::map<Element, Rational> pins;
  for (const auto &item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw MalformedInput("pin '" + item + "' is not of the form i=p/q");
    const auto idx = parse_indices(item.substr(0, eq), l);
    if (idx.size() != 1)
      throw MalformedInput("pin '" + item + "' is not of the form i=p/q");
    pins[idx[0]] = parse_rational(item.substr(eq + 1));
  }
  return pins;
}

void report_members(Report &r, const SubOml &s) {
  r.line({"size", std::to_string(s.size())});
  r.line("members", s.members());
}

void report_state(Report &r, const RationalState &s) {
  for (Element i = 0; i < s.values().size(); ++i)
    r.line({std::to_string(i),
            s[i].get_num().get_str() + "/" + s[i].get_den().get_str()});
}

int report_infeasible(Report &r, const InfeasibilityCertificate &cert,
                      const std::string &path) {
  write_file(path, format_certificate(cert));
  r.line({"infeasible"});
  r.line({"certificate", path});
  return kExitNo;
}

struct Options {
  bool tsv = false;

  std::string file;
  std::string file2;
  bool full_report = false;

  std::size_t boolean_k = 0;
  std::size_t mo_k = 0;
  std::vector<std::string> horizontal;
  std::vector<std::string> product;
  std::vector<std::string> boolean_sum;
  std::string paste;
  bool strict = false;
  std::string output;

  std::string elements;
  std::size_t cap = 0;

  bool two_valued = false;
  std::string force_one;
  std::string force_zero;
  std::size_t limit = 0;
  std::string certificate;

  std::string sub;
  std::string pins;
  std::size_t element = 0;

  std::vector<std::string> vecs;
};

int cmd_validate(const Options &o, Report &r) {
  const auto candidate = parse_oml_candidate(read_file(o.file));
  const auto report = validate_oml(candidate, o.full_report
                                                  ? ValidationMode::FullReport
                                                  : ValidationMode::FailFast);
  if (report.ok()) {
    r.line({"ok"});
    r.line({"elements", std::to_string(candidate.n)});
    return kExitOk;
  }
  r.line({"invalid"});
  for (const auto &v : report.violations)
    r.line({"violation", v.axiom, std::to_string(v.first),
            std::to_string(v.second)});
  return kExitNo;
}

int cmd_construct(const Options &o, Report &r, const CLI::App &sub) {
  const int chosen = static_cast<int>(sub.count("--boolean")) +
                     static_cast<int>(sub.count("--mo")) +
                     static_cast<int>(!o.horizontal.empty()) +
                     static_cast<int>(!o.product.empty()) +
                     static_cast<int>(!o.boolean_sum.empty()) +
                     static_cast<int>(!o.paste.empty());
  if (chosen != 1)
    throw MalformedInput("construct needs exactly one of --boolean, --mo, "
                         "--horizontal, --product, --boolean-sum, --paste");
  auto load_all = [&](const std::vector<std::string> &paths) {
    std::vector<FiniteOml> parts;
    for (const auto &p : paths)
      parts.push_back(load(p, o.strict));
    return parts;
  };

  std::optional<FiniteOml> result;
  if (sub.count("--boolean") != 0)
    result = boolean_algebra(o.boolean_k);
  else if (sub.count("--mo") != 0)
    result = mo(o.mo_k);
  else if (!o.horizontal.empty())
    result = horizontal_sum(load_all(o.horizontal));
  else if (!o.product.empty())
    result = product(load_all(o.product));
  else if (!o.boolean_sum.empty())
    result = boolean_sum(load(o.boolean_sum[0], o.strict),
                         load(o.boolean_sum[1], o.strict));
  else
    result = greechie_to_oml(parse_greechie(read_file(o.paste), o.strict),
                             {o.strict});

  const std::string text = serialize_oml(*result);
  if (o.output.empty()) {
    r.raw() << text;
    return kExitOk;
  }
  write_file(o.output, text);
  r.line({"elements", std::to_string(result->size())});
  r.line({"written", o.output});
  return kExitOk;
}

int cmd_gen(const Options &o, Report &r) {
  const auto l = load(o.file);
  const auto gens = parse_indices(o.elements, l);
  report_members(r, generate_suboml(l, gens));
  return kExitOk;
}

int cmd_centre(const Options &o, Report &r) {
  const auto l = load(o.file);
  const auto c = centre(l);
  report_members(r, c);
  r.line({"boolean", c.size() == l.size() ? "yes" : "no"});
  return kExitOk;
}

int cmd_blocks(const Options &o, Report &r) {
  const auto l = load(o.file);
  const auto bs = blocks(l);
  r.line({"blocks", std::to_string(bs.size())});
  for (std::size_t i = 0; i < bs.size(); ++i)
    r.line("block " + std::to_string(i), bs[i].members());
  return kExitOk;
}

int cmd_mingen(const Options &o, Report &r, const CLI::App &sub) {
  const auto l = load(o.file);
  GeneratorSearchOptions options;
  if (sub.count("--cap") != 0)
    options.element_cap = o.cap;
  const auto m = min_generators(l, options);
  r.line({"elements", std::to_string(l.size())});
  r.line({"generators", std::to_string(m.count)});
  r.line({"cf", std::to_string(m.cf)});
  r.line("witness", m.witness);
  return kExitOk;
}

int cmd_iso(const Options &o, Report &r) {
  const auto a = load(o.file);
  const auto b = load(o.file2);
  const auto h = find_isomorphism(a, b);
  if (!h) {
    r.line({"not isomorphic"});
    return kExitNo;
  }
  r.line({"isomorphic"});
  r.line("map", h->map());
  return kExitOk;
}

int cmd_states(const Options &o, Report &r) {
  const auto l = load(o.file);
  if (!o.two_valued) {
    auto result = has_state(l);
    if (!result.exists())
      return report_infeasible(r, *result.certificate,
                               o.certificate.empty() ? o.file + ".cert"
                                                     : o.certificate);
    r.line({"feasible"});
    report_state(r, *result.state);
    return kExitOk;
  }
  TwoValuedQuery q;
  q.force_one = parse_indices(o.force_one, l);
  q.force_zero = parse_indices(o.force_zero, l);
  if (o.limit > 0)
    q.limit = o.limit;
  const auto states = two_valued_states(l, q);
  r.line({"two-valued states", std::to_string(states.size())});
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::vector<std::string> fields{"state " + std::to_string(k)};
    for (auto v : states[k].values())
      fields.push_back(std::to_string(v));
    r.line(fields);
  }
  return states.empty() ? kExitNo : kExitOk;
}

int cmd_extend(const Options &o, Report &r) {
  const auto l = load(o.file);
  auto gens = parse_indices(o.sub, l);
  const auto pins = parse_pins(o.pins, l);
  for (const auto &[e, v] : pins)
    gens.push_back(e);
  const auto sub = generate_suboml(l, gens);
  const auto sub_oml = sub.as_oml();

  // The pins need only be partial: any state on the subOML matching them is
  // extended.
  auto sys = state_constraints(sub_oml);
  for (const auto &[e, v] : pins) {
    const auto k = static_cast<std::size_t>(
        std::lower_bound(sub.members().begin(), sub.members().end(), e) -
        sub.members().begin());
    sys.equations.push_back({{{k, Rational(1)}}, v});
  }
  auto local = lp_feasible(sys);
  if (auto *cert = std::get_if<InfeasibilityCertificate>(&local)) {
    r.line({"pins admit no state on the subOML"});
    return report_infeasible(r, *cert,
                             o.certificate.empty() ? o.file + ".cert"
                                                   : o.certificate);
  }
  const auto s =
      RationalState::verified(sub_oml, std::get<Witness>(std::move(local)).values);
  try {
    const auto extended = extend_state(l, sub, s);
    r.line({"extended"});
    r.line("subOML", sub.members());
    report_state(r, extended);
    return kExitOk;
  } catch (const Infeasible &e) {
    return report_infeasible(r, e.certificate(),
                             o.certificate.empty() ? o.file + ".cert"
                                                   : o.certificate);
  }
}

int cmd_prime_ideal(const Options &o, Report &r) {
  const auto l = load(o.file);
  r.line("ideal", prime_ideal_containing(l, o.element));
  return kExitOk;
}

int cmd_set_representable(const Options &o, Report &r) {
  const auto l = load(o.file);
  const bool yes = is_set_representable(l);
  r.line({"set-representable", yes ? "yes" : "no"});
  return yes ? kExitOk : kExitNo;
}

int cmd_rays_closure(const Options &o, Report &r) {
  std::vector<RationalSubspace> gens;
  for (const auto &v : o.vecs) {
    const std::array<RationalVector, 1> one{parse_rational_vector(v)};
    gens.push_back(subspace_from_vectors(one));
  }
  const auto result = ray_closure(gens, o.cap);
  if (const auto *capped = std::get_if<ClosureCapReached>(&result)) {
    r.line({"cap exceeded at", std::to_string(capped->count)});
    return kExitNo;
  }
  const auto &family = std::get<ClosedFamily>(result);
  const auto ordered = canonical_order(family);
  r.line({"closed", std::to_string(ordered.size())});
  for (std::size_t i = 0; i < ordered.size(); ++i)
    r.line({std::to_string(i), ordered[i].to_string()});
  if (!o.output.empty()) {
    write_file(o.output, serialize_oml(as_finite_oml(family)));
    r.line({"written", o.output});
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Options o;
  CLI::App app{"Finite orthomodular lattice toolkit", "oml"};
  app.require_subcommand(1);
  app.add_flag("--tsv", o.tsv, "Tab-separated output");

  auto *validate = app.add_subcommand("validate", "Check the OML axioms");
  validate->add_option("file", o.file, ".oml file")->required();
  validate->add_flag("--full-report", o.full_report,
                     "Collect every violation instead of stopping at the first");

  auto *construct = app.add_subcommand("construct", "Build a lattice");
  construct->add_option("--boolean", o.boolean_k, "Boolean algebra on k atoms");
  construct->add_option("--mo", o.mo_k, "MO_k");
  construct->add_option("--horizontal", o.horizontal, "Horizontal sum of files");
  construct->add_option("--product", o.product, "Product of files");
  construct->add_option("--boolean-sum", o.boolean_sum, "Boolean sum L B")
      ->expected(2);
  construct->add_option("--paste", o.paste, "Paste a .gre diagram");
  construct->add_flag("--strict", o.strict, "Reject two-atom blocks");
  construct->add_option("-o,--output", o.output, "Output .oml file");

  auto *gen = app.add_subcommand("gen", "SubOML generated by elements");
  gen->add_option("file", o.file)->required();
  gen->add_option("--elements", o.elements, "i,j,...")->required();

  auto *centre_cmd = app.add_subcommand("centre", "Centre of the lattice");
  centre_cmd->add_option("file", o.file)->required();

  auto *blocks_cmd = app.add_subcommand("blocks", "Maximal Boolean subalgebras");
  blocks_cmd->add_option("file", o.file)->required();

  auto *mingen = app.add_subcommand("mingen", "Minimum generating set");
  mingen->add_option("file", o.file)->required();
  mingen->add_option("--cap", o.cap, "Element cap (default 64)");

  auto *iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("first", o.file)->required();
  iso->add_option("second", o.file2)->required();

  auto *states = app.add_subcommand("states", "State existence");
  states->add_option("file", o.file)->required();
  states->add_flag("--two-valued", o.two_valued, "Enumerate two-valued states");
  states->add_option("--force-one", o.force_one, "i,j,...");
  states->add_option("--force-zero", o.force_zero, "i,j,...");
  states->add_option("--limit", o.limit, "Stop after m states");
  states->add_option("--certificate", o.certificate,
                     "Certificate path (default <file>.cert)");

  auto *extend = app.add_subcommand("extend", "Extend a state from a subOML");
  extend->add_option("file", o.file)->required();
  extend->add_option("--sub", o.sub, "Generators of the subOML")->required();
  extend->add_option("--pin", o.pins, "i=p/q,...")->required();
  extend->add_option("--certificate", o.certificate,
                     "Certificate path (default <file>.cert)");

  auto *prime = app.add_subcommand("prime-ideal", "Prime ideal containing a");
  prime->add_option("file", o.file)->required();
  prime->add_option("--element", o.element)->required();

  auto *setrep = app.add_subcommand("set-representable",
                                    "Order-determining two-valued states");
  setrep->add_option("file", o.file)->required();

  auto *rays = app.add_subcommand("rays", "Subspaces of rational 3-space");
  rays->require_subcommand(1);
  auto *closure = rays->add_subcommand("closure", "Generated subOML");
  closure->add_option("--vec", o.vecs, "x,y,z (repeatable)")->required();
  o.cap = 1000;
  closure->add_option("--cap", o.cap, "Size cap (default 1000)");
  closure->add_option("-o,--output", o.output, "Write the closure as .oml");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (*mingen && mingen->count("--cap") == 0)
    o.cap = 0;

  Report r(out, o.tsv);
  try {
    if (*validate)
      return cmd_validate(o, r);
    if (*construct)
      return cmd_construct(o, r, *construct);
    if (*gen)
      return cmd_gen(o, r);
    if (*centre_cmd)
      return cmd_centre(o, r);
    if (*blocks_cmd)
      return cmd_blocks(o, r);
    if (*mingen)
      return cmd_mingen(o, r, *mingen);
    if (*iso)
      return cmd_iso(o, r);
    if (*states)
      return cmd_states(o, r);
    if (*extend)
      return cmd_extend(o, r);
    if (*prime)
      return cmd_prime_ideal(o, r);
    if (*setrep)
      return cmd_set_representable(o, r);
    if (*closure)
      return cmd_rays_closure(o, r);
  } catch (const CapExceeded &e) {
    r.line({"cap exceeded", std::to_string(e.requested()),
            std::to_string(e.cap())});
    return kExitNo;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << "error: no command\n";
  return kExitError;
}

} // namespace oml::cli
