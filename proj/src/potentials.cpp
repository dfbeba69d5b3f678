#include "nlslab/potentials.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nlslab {

PotentialSpec PotentialSpec::zero() { return PotentialSpec{{PotentialTerm{}}}; }

PotentialSpec PotentialSpec::constant(double c) {
  PotentialTerm t;
  t.kind = PotentialKind::Constant;
  t.value = c;
  return PotentialSpec{{t}};
}

PotentialSpec PotentialSpec::gaussian_well(double depth, double width, std::array<double, 2> center) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian-well width must be positive");
  PotentialTerm t;
  t.kind = PotentialKind::GaussianWell;
  t.value = depth;
  t.width = width;
  t.center = center;
  return PotentialSpec{{t}};
}

PotentialSpec PotentialSpec::plateau(double height, double radius, std::array<double, 2> center) {
  if (!(radius > 0.0)) throw std::invalid_argument("plateau radius must be positive");
  PotentialTerm t;
  t.kind = PotentialKind::Plateau;
  t.value = height;
  t.width = radius;
  t.center = center;
  return PotentialSpec{{t}};
}

PotentialSpec PotentialSpec::operator+(const PotentialSpec& other) const {
  PotentialSpec out = *this;
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

RealField eval_potential(const PotentialSpec& spec, const Grid& g) {
  RealField out{g, ArrayXd::Zero(g.size())};
  ArrayXd x0 = coordinate_field(g, 0);
  ArrayXd x1;
  if (g.dim == 2) x1 = coordinate_field(g, 1);
  for (const PotentialTerm& t : spec.terms) {
    switch (t.kind) {
      case PotentialKind::Zero:
        break;
      case PotentialKind::Constant:
        out.samples += t.value;
        break;
      case PotentialKind::GaussianWell: {
        if (!(t.width > 0.0)) throw std::invalid_argument("gaussian-well width must be positive");
        ArrayXd r2 = (x0 - t.center[0]).square();
        if (g.dim == 2) r2 += (x1 - t.center[1]).square();
        out.samples += t.value * (-r2 / (2.0 * t.width * t.width)).exp();
        break;
      }
      case PotentialKind::Plateau: {
        if (!(t.width > 0.0)) throw std::invalid_argument("plateau radius must be positive");
        ArrayXd r2 = (x0 - t.center[0]).square();
        if (g.dim == 2) r2 += (x1 - t.center[1]).square();
        out.samples += (r2 <= t.width * t.width).cast<double>() * t.value;
        break;
      }
    }
  }
  return out;
}

std::pair<RealField, double> shift_nonneg(const RealField& v) {
  double shift = v.samples.minCoeff();
  RealField out{v.grid, v.samples - shift};
  return {out, shift};
}

HypothesisReport check_hypothesis(const RealField& q, double lambda0) {
  if (!(lambda0 > 0.0)) throw std::invalid_argument("lambda0 must be positive");
  HypothesisReport rep;
  rep.lambda0 = lambda0;
  std::int64_t count = (q.samples > lambda0).count();
  rep.superlevel_measure = q.grid.cell_volume * double(count);
  rep.q_nonneg = (q.samples >= 0.0).all();
  double box_volume = q.grid.cell_volume * double(q.grid.size());
  rep.satisfied = rep.q_nonneg && rep.superlevel_measure > 0.0 && rep.superlevel_measure < box_volume;
  return rep;
}

RealField clip_min(const RealField& q, double lambda0) {
  return RealField{q.grid, q.samples.min(lambda0)};
}

namespace {

struct TermParser {
  const std::string& text;
  size_t pos = 0;

  explicit TermParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("potential spec: " + what + " at offset " + std::to_string(pos) +
                                " in '" + text + "'");
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-' || text[pos] == '_')) {
      // '-' only continues an identifier when not starting a number
      if (text[pos] == '-' && pos == start) break;
      ++pos;
    }
    if (pos == start) fail("expected identifier");
    return text.substr(start, pos - start);
  }
  double number() {
    skip_ws();
    size_t idx = 0;
    double v = 0;
    try {
      v = std::stod(text.substr(pos), &idx);
    } catch (const std::exception&) {
      fail("expected number");
    }
    pos += idx;
    return v;
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

PotentialTerm parse_term(TermParser& p) {
  std::string kind = p.ident();
  PotentialTerm t;
  if (kind == "zero") {
    t.kind = PotentialKind::Zero;
    return t;
  }
  if (!p.consume('(')) p.fail("expected '(' after '" + kind + "'");
  bool have_value = false, have_width = false, have_center = false;
  while (true) {
    std::string name = p.ident();
    if (!p.consume('=')) p.fail("expected '=' after '" + name + "'");
    if (name == "center") {
      t.center[0] = p.number();
      if (p.consume(':')) t.center[1] = p.number();
      have_center = true;
    } else {
      double v = p.number();
      if (name == "value" || name == "depth" || name == "height") {
        t.value = v;
        have_value = true;
      } else if (name == "width" || name == "radius") {
        t.width = v;
        have_width = true;
      } else {
        p.fail("unknown parameter '" + name + "'");
      }
    }
    if (p.consume(')')) break;
    if (!p.consume(',')) p.fail("expected ',' or ')'");
  }
  (void)have_center;
  if (kind == "constant") {
    if (!have_value) p.fail("constant requires value=");
    t.kind = PotentialKind::Constant;
  } else if (kind == "gaussian-well") {
    if (!have_value || !have_width) p.fail("gaussian-well requires depth= and width=");
    if (!(t.width > 0.0)) p.fail("gaussian-well width must be positive");
    t.kind = PotentialKind::GaussianWell;
  } else if (kind == "plateau") {
    if (!have_value || !have_width) p.fail("plateau requires height= and radius=");
    if (!(t.width > 0.0)) p.fail("plateau radius must be positive");
    t.kind = PotentialKind::Plateau;
  } else {
    p.fail("unknown potential kind '" + kind + "'");
  }
  return t;
}

void format_double(std::ostringstream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

PotentialSpec PotentialSpec::parse(const std::string& text) {
  TermParser p(text);
  PotentialSpec spec;
  if (p.eof()) throw std::invalid_argument("potential spec: empty string");
  spec.terms.push_back(parse_term(p));
  while (!p.eof()) {
    if (!p.consume('+')) p.fail("expected '+' between terms");
    spec.terms.push_back(parse_term(p));
  }
  return spec;
}

std::string PotentialSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const PotentialTerm& t : terms) {
    if (!first) os << " + ";
    first = false;
    switch (t.kind) {
      case PotentialKind::Zero:
        os << "zero";
        break;
      case PotentialKind::Constant:
        os << "constant(value=";
        format_double(os, t.value);
        os << ")";
        break;
      case PotentialKind::GaussianWell:
        os << "gaussian-well(depth=";
        format_double(os, t.value);
        os << ", width=";
        format_double(os, t.width);
        os << ", center=";
        format_double(os, t.center[0]);
        os << ":";
        format_double(os, t.center[1]);
        os << ")";
        break;
      case PotentialKind::Plateau:
        os << "plateau(height=";
        format_double(os, t.value);
        os << ", radius=";
        format_double(os, t.width);
        os << ", center=";
        format_double(os, t.center[0]);
        os << ":";
        format_double(os, t.center[1]);
        os << ")";
        break;
    }
  }
  return os.str();
}

}  // namespace nlslab
