#include "rbg/families.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "rbg/errors.hpp"

namespace rbg {

FamilyId family_from_name(const std::string& name) {
  if (name == "egm") return FamilyId::EGM;
  if (name == "fourbox") return FamilyId::FOURBOX;
  if (name == "abc") return FamilyId::ABC;
  if (name == "peculiar") return FamilyId::PECULIAR;
  throw TemplateMissing("unknown family: " + name);
}

const char* family_name(FamilyId f) {
  switch (f) {
    case FamilyId::EGM: return "egm";
    case FamilyId::FOURBOX: return "fourbox";
    case FamilyId::ABC: return "abc";
    default: return "peculiar";
  }
}

int family_arity(FamilyId f) {
  switch (f) {
    case FamilyId::EGM: return 1;
    case FamilyId::FOURBOX: return 4;
    case FamilyId::ABC: return 3;
    default: return 2;
  }
}

long long special_n(long long r, long long l) { return l * (r * l - 2); }

std::set<std::pair<long long, long long>> enumerate_rl(long long k,
                                                       long long l_bound) {
  if (k == 0) throw ZeroK("k = 0 admits the whole l = 0 line");
  if (k < 1 || l_bound < 1) throw std::invalid_argument("enumerate_rl: bad bounds");
  std::set<std::pair<long long, long long>> out;
  for (long long l = -l_bound; l <= l_bound; ++l) {
    if (l == 0) continue;
    // l(rl - 2) = k  <=>  r = (k + 2l) / l^2
    long long num = k + 2 * l;
    if (num % (l * l)) continue;
    out.insert({num / (l * l), l});
  }
  return out;
}

long long peculiar_n(long long s, long long l, PeculiarBranch branch) {
  long long sq = (s - l) * (s - l);
  return branch == PeculiarBranch::plus ? 1 - sq : sq - 1;
}

long long peculiar_framing(long long b, long long g, long long l, long long s) {
  long long d = b - s;
  if (d != 1 && d != -1) throw BadBranch("peculiar_framing needs |b - s| = 1");
  long long v = (g + b - 2 * l) - (l - b) * (l - b);
  return d == 1 ? v : -v;
}

// ---- templates -------------------------------------------------------------

namespace {

struct Marker {
  std::string id;
  int e1 = 0, e2 = 0, sign = 1;
  bool antiparallel = false;
  std::string fill;
};

struct Template {
  PlanarDiagram base;
  std::vector<Marker> markers;
  std::map<std::string, std::string> meta;  // key -> value
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Template load_template(FamilyId f, const std::string& member) {
  std::string path = std::string(RBG_DATA_DIR) + "/templates/" +
                     family_name(f) + "_" + member + ".tpl";
  std::ifstream in(path);
  if (!in) throw TemplateMissing(path);
  Template t;
  std::string line, pd_line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("X[", 0) == 0) {
      pd_line = line;
    } else if (line.rfind("T[", 0) == 0) {
      Marker m;
      std::string body = line.substr(2, line.find(']') - 2);
      std::istringstream is(body);
      std::string tok;
      std::vector<std::string> parts;
      while (std::getline(is, tok, ',')) parts.push_back(trim(tok));
      if (parts.size() != 5) throw TemplateMissing("bad marker in " + path);
      m.id = parts[0];
      m.e1 = std::stoi(parts[1]);
      m.e2 = std::stoi(parts[2]);
      m.sign = std::stoi(parts[3]);
      m.antiparallel = parts[4] == "ap";
      t.markers.push_back(m);
    } else if (line.rfind("META", 0) == 0) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw TemplateMissing("bad META in " + path);
      t.meta[trim(line.substr(4, eq - 4))] = trim(line.substr(eq + 1));
    }
  }
  if (pd_line.empty()) throw TemplateMissing("no diagram in " + path);
  t.base = parse_pd(pd_line);
  for (auto& m : t.markers) {
    auto it = t.meta.find("fill " + m.id);
    if (it == t.meta.end())
      throw TemplateMissing("no fill for slot " + m.id + " in " + path);
    m.fill = it->second;
  }
  return t;
}

// fill expressions: signed sums of integer literals and single-letter
// parameters, e.g. "a", "r-c", "a+b-1"
long long eval_fill(const std::string& expr,
                    const std::map<char, long long>& vars) {
  long long total = 0;
  size_t i = 0;
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  while (i < s.size()) {
    long long sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw TemplateMissing("bad fill expression: " + expr);
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        v = 10 * v + (s[i++] - '0');
      total += sign * v;
    } else {
      auto it = vars.find(s[i]);
      if (it == vars.end())
        throw TemplateMissing(std::string("unknown parameter '") + s[i] +
                              "' in fill: " + expr);
      total += sign * it->second;
      ++i;
    }
  }
  return total;
}

std::map<char, long long> param_vars(const FamilyParams& p) {
  std::map<char, long long> vars;
  const char* names = p.family == FamilyId::EGM ? "m" : "abcd";
  for (size_t i = 0; i < p.twists.size(); ++i)
    vars[names[i]] = p.twists[i];
  if (p.r.integral()) vars['r'] = p.r.num;
  return vars;
}

PlanarDiagram instantiate(const Template& t, const FamilyParams& p) {
  auto vars = param_vars(p);
  PlanarDiagram d = t.base;
  for (auto& m : t.markers) {
    long long fill = eval_fill(m.fill, vars);
    TwistSlot slot{m.id, m.e1, m.e2, m.antiparallel, m.sign};
    d = insert_full_twists(d, slot, static_cast<int>(fill));
  }
  return d;
}

Framing parse_framing(const std::string& v, const FamilyParams& p) {
  if (v == "r") {
    if (!p.r.integral() && p.family != FamilyId::PECULIAR)
      throw RationalFramingOutsideR("special families need integral r");
    return p.r;
  }
  Framing f;
  auto slash = v.find('/');
  if (slash == std::string::npos) {
    f.num = std::stoll(v);
  } else {
    f.num = std::stoll(v.substr(0, slash));
    f.den = std::stoll(v.substr(slash + 1));
  }
  return f;
}

void check_params(const FamilyParams& p) {
  if (static_cast<int>(p.twists.size()) != family_arity(p.family))
    throw TwistArityMismatch(std::string(family_name(p.family)) + " takes " +
                             std::to_string(family_arity(p.family)) +
                             " twist counts, got " +
                             std::to_string(p.twists.size()));
  if (p.family == FamilyId::PECULIAR) {
    // 1/r must be an integer when r != 0
    if (p.r.num != 0 && p.r.num != 1 && p.r.num != -1)
      throw RationalFramingOutsideR("peculiar r must have integral 1/r");
  } else if (!p.r.integral()) {
    throw RationalFramingOutsideR("rational framing only allowed on peculiar R");
  }
}

}  // namespace

RBGInstance build_instance(const FamilyParams& params) {
  check_params(params);
  Template t = load_template(params.family, "link");
  RBGInstance inst;
  inst.params = params;
  inst.link.link = instantiate(t, params);
  if (inst.link.link.n_components != 3)
    throw MalformedPd("link template must have three components");
  auto comp_of_color = [&](const std::string& c) {
    auto spec = t.meta.at("components");  // "B:0,R:1,G:2"
    auto pos = spec.find(c + ":");
    return std::stoi(spec.substr(pos + 2));
  };
  inst.link.comp_b = comp_of_color("B");
  inst.link.comp_r = comp_of_color("R");
  inst.link.comp_g = comp_of_color("G");
  inst.link.fr_r = parse_framing(t.meta.at("framing_r"), params);
  inst.link.fr_b = std::stoll(t.meta.at("framing_b"));
  inst.link.fr_g = std::stoll(t.meta.at("framing_g"));
  inst.disk_rb = std::stoi(t.meta.at("disk_rb"));
  inst.disk_rg = std::stoi(t.meta.at("disk_rg"));
  inst.l = linking_number(inst.link.link, inst.link.comp_b, inst.link.comp_g);
  if (inst.l != std::stoll(t.meta.at("l")))
    throw MalformedPd("template linking number drifted from metadata");
  auto m = linking_matrix(inst);
  long long det = 0;
  for (int i = 0; i < 3; ++i)
    det += m[0][i] * (m[1][(i + 1) % 3] * m[2][(i + 2) % 3] -
                      m[1][(i + 2) % 3] * m[2][(i + 1) % 3]);
  inst.n = -det;
  return inst;
}

std::array<std::array<long long, 3>, 3> linking_matrix(const RBGInstance& inst) {
  if (!inst.link.fr_r.integral())
    throw RationalFramingOutsideR("linking matrix needs integral framings");
  const auto& L = inst.link;
  long long rb = linking_number(L.link, L.comp_r, L.comp_b);
  long long rg = linking_number(L.link, L.comp_r, L.comp_g);
  long long bg = linking_number(L.link, L.comp_b, L.comp_g);
  return {{{L.fr_r.num, rb, rg}, {rb, L.fr_b, bg}, {rg, bg, L.fr_g}}};
}

std::pair<DerivedKnot, DerivedKnot> derive_knots(const RBGInstance& inst,
                                                 bool color_switch) {
  Template tb = load_template(inst.params.family, color_switch ? "kg" : "kb");
  Template tg = load_template(inst.params.family, color_switch ? "kb" : "kg");
  DerivedKnot b, g;
  b.diagram = instantiate(tb, inst.params);
  g.diagram = instantiate(tg, inst.params);
  b.framing = g.framing = inst.n;  // the n-surgery homeomorphism framing
  b.color = 'B';
  g.color = 'G';
  std::ostringstream prov;
  prov << family_name(inst.params.family) << "(";
  for (size_t i = 0; i < inst.params.twists.size(); ++i)
    prov << (i ? "," : "") << inst.params.twists[i];
  prov << ";" << inst.params.r.num;
  if (!inst.params.r.integral()) prov << "/" << inst.params.r.den;
  prov << ")" << (color_switch ? " switched" : "");
  b.provenance = prov.str() + " slide/cancel B";
  g.provenance = prov.str() + " slide/cancel G";
  if (!b.diagram.is_knot() || !g.diagram.is_knot())
    throw NotAKnot("derived diagram is not a knot");
  return {b, g};
}

bool prop_r_applicable(const RBGInstance& inst) {
  return inst.disk_rb == 1 && inst.disk_rg == 1 &&
         inst.link.fr_r.integral() && inst.link.fr_r.num == 0;
}

}  // namespace rbg
