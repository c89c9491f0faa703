#include "cvgeo/io.hpp"

#include <map>
#include <sstream>

#include "cvgeo/errors.hpp"

namespace cvgeo::io {

namespace {

// Exact rational from a JSON field: strings and integers parse exactly;
// floating-point numbers convert through their binary value.
Rational rat_field(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw ParamOutOfDomain("expected a number or a rational string");
}

double double_field(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw ParamOutOfDomain("expected a number or a decimal string");
}

std::array<double, 2> point2_field(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParamOutOfDomain("expected a planar point [x, y]");
  }
  return {double_field(j[0]), double_field(j[1])};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

} // namespace

Polytope polytope_from_json(const json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<RatVec> pts;
  for (const json& row : j.at("vertices")) {
    RatVec p;
    for (const json& coord : row) p.push_back(rat_field(coord));
    if (p.size() != dim) {
      throw ParamOutOfDomain("vertex dimension differs from declared dim");
    }
    pts.push_back(std::move(p));
  }
  return Polytope::from_points(pts);
}

json polytope_to_json(const Polytope& P) {
  json j;
  j["dim"] = P.dim();
  json verts = json::array();
  for (const RatVec& v : P.vertices()) {
    json row = json::array();
    for (const Rational& c : v) row.push_back(to_string(c));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

BodyModel body_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "ball") {
    Ball b;
    b.radius = double_field(j.at("radius"));
    b.dim = j.value("dim", std::size_t{2});
    if (!(b.radius > 0.0)) throw InvalidBody("ball radius must be positive");
    if (b.dim == 0) throw InvalidBody("ball dimension must be at least 1");
    return b;
  }
  if (type == "ellipsoid") {
    std::vector<std::vector<double>> A;
    for (const json& row : j.at("matrix")) {
      std::vector<double> r;
      for (const json& entry : row) r.push_back(double_field(entry));
      A.push_back(std::move(r));
    }
    return Ellipsoid::from_shape_matrix(A);
  }
  if (type == "piecewise2d") {
    std::vector<CurvePiece> pieces;
    for (const json& pj : j.at("pieces")) {
      const auto kind = pj.at("kind").get<std::string>();
      if (kind == "arc") {
        ArcPiece arc;
        arc.center = point2_field(pj.at("center"));
        arc.radius = double_field(pj.at("radius"));
        arc.from = double_field(pj.at("from"));
        arc.to = double_field(pj.at("to"));
        pieces.push_back(arc);
      } else if (kind == "segment") {
        pieces.push_back(
            SegmentPiece{point2_field(pj.at("from")), point2_field(pj.at("to"))});
      } else {
        throw InvalidBody("unknown piece kind: " + kind);
      }
    }
    return Piecewise2D(std::move(pieces));
  }
  if (type == "polytope") {
    return PolytopeBody{polytope_from_json(j)};
  }
  throw InvalidBody("unknown body type: " + type);
}

CompositeSpec composite_from_json(const json& j, std::size_t ambient_dim) {
  CompositeSpec spec;
  if (j.contains("c0")) spec.c0 = rat_field(j.at("c0"));
  if (j.contains("c1")) spec.c1 = rat_field(j.at("c1"));
  if (j.contains("c2")) spec.c2 = rat_field(j.at("c2"));
  if (j.contains("phi") && !j.at("phi").is_null()) {
    spec.phi = conc_fn_from_json(j.at("phi"), ambient_dim);
  }
  return spec;
}

json composite_to_json(const CompositeSpec& spec) {
  json j;
  j["c0"] = to_string(spec.c0);
  j["c1"] = to_string(spec.c1);
  j["c2"] = to_string(spec.c2);
  if (spec.phi) {
    j["phi"] = json{{"label", spec.phi->label()}};
  } else {
    j["phi"] = nullptr;
  }
  return j;
}

ConcFn conc_fn_from_json(const json& j, std::size_t ambient_dim) {
  const auto type = j.at("type").get<std::string>();
  if (type == "power") {
    return ConcFn::power(double_field(j.at("p")), ambient_dim);
  }
  if (type == "affine") {
    return ConcFn::affine_capped(double_field(j.at("alpha")),
                                 double_field(j.at("beta")));
  }
  if (type == "table") {
    std::vector<std::pair<double, double>> pts;
    for (const json& row : j.at("points")) {
      if (!row.is_array() || row.size() != 2) {
        throw InvalidConcFn("table points must be [s, value] pairs");
      }
      pts.emplace_back(double_field(row[0]), double_field(row[1]));
    }
    return ConcFn::from_table(std::move(pts));
  }
  throw InvalidConcFn("unknown weight type: " + type);
}

ConcFn conc_fn_from_descriptor(const std::string& text,
                               std::size_t ambient_dim) {
  const auto colon = text.find(':');
  const std::string name = trim(text.substr(0, colon));
  const std::string params =
      colon == std::string::npos ? "" : text.substr(colon + 1);

  std::map<std::string, std::string> kv;
  std::vector<std::pair<double, double>> table_points;
  for (const std::string& part : split(params, ',')) {
    const std::string p = trim(part);
    if (p.empty()) continue;
    const auto eq = p.find('=');
    if (eq == std::string::npos) {
      throw InvalidConcFn("weight parameter needs key=value: " + p);
    }
    const std::string key = trim(p.substr(0, eq));
    const std::string value = trim(p.substr(eq + 1));
    if (name == "table") {
      table_points.emplace_back(to_double(parse_rational(key)),
                                to_double(parse_rational(value)));
    } else {
      kv[key] = value;
    }
  }

  if (name == "power") {
    if (!kv.count("p")) throw InvalidConcFn("power weight needs p=<value>");
    return ConcFn::power(to_double(parse_rational(kv.at("p"))), ambient_dim);
  }
  if (name == "affine") {
    if (!kv.count("alpha") || !kv.count("beta")) {
      throw InvalidConcFn("affine weight needs alpha=<v>,beta=<v>");
    }
    return ConcFn::affine_capped(to_double(parse_rational(kv.at("alpha"))),
                                 to_double(parse_rational(kv.at("beta"))));
  }
  if (name == "table") {
    return ConcFn::from_table(std::move(table_points));
  }
  throw InvalidConcFn("unknown weight descriptor: " + name);
}

GridFunction1D grid1d_from_csv(const std::string& text) {
  std::vector<std::pair<Rational, Rational>> pts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto fields = split(t, ',');
    if (fields.size() != 2) {
      throw ParamOutOfDomain("1-D table line needs exactly x,value: " + t);
    }
    pts.emplace_back(parse_rational(trim(fields[0])),
                     parse_rational(trim(fields[1])));
  }
  return GridFunction1D::from_points(std::move(pts));
}

GridFunction2D grid2d_from_csv(const std::string& text) {
  GridFunction2D g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto fields = split(t, ',');
    if (fields.size() != 3) {
      throw ParamOutOfDomain("2-D table line needs exactly x,y,value: " + t);
    }
    g.set(parse_rational(trim(fields[0])), parse_rational(trim(fields[1])),
          parse_rational(trim(fields[2])));
  }
  return g;
}

} // namespace cvgeo::io
