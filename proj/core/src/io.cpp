#include "so3zi/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace so3zi::io {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

// doubles go out as numbers rounded to 12 significant digits
json num(double v) { return json(std::strtod(fmt(v).c_str(), nullptr)); }

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

BigInt int_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    GaussInt g = GaussInt::parse(j.get<std::string>());
    if (g.im != 0) bad("expected a rational integer, got " + j.get<std::string>());
    return g.re;
  }
  bad("expected an integer, got " + j.dump());
}

template <class T, class F>
Mat2<T> mat_from(const json& j, F entry) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
      bad("matrix array must be [[a,b],[c,d]]");
    return {entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1])};
  }
  if (!j.is_object()) bad("matrix must be an object {\"a\",\"b\",\"c\",\"d\"}");
  for (const char* k : {"a", "b", "c", "d"})
    if (!j.contains(k)) bad(std::string("matrix is missing entry \"") + k + "\"");
  return {entry(j["a"]), entry(j["b"]), entry(j["c"]), entry(j["d"])};
}

template <class T, class F>
json mat_rows(const Mat2<T>& m, F f) {
  return json::array({json::array({f(m.a), f(m.b)}), json::array({f(m.c), f(m.d)})});
}

}  // namespace

json to_json(const GaussInt& z) { return z.to_string(); }

json to_json(const Cyc8& z) {
  if (auto g = z.to_gauss_int()) return g->to_string();
  json j;
  j["a"] = z.a().to_string();
  j["b"] = z.b().to_string();
  j["k"] = z.k();
  return j;
}

json to_json(const CMat& m) {
  json j;
  j["a"] = to_json(m.a);
  j["b"] = to_json(m.b);
  j["c"] = to_json(m.c);
  j["d"] = to_json(m.d);
  return j;
}

json to_json(const GMat& m) {
  json j;
  j["a"] = to_json(m.a);
  j["b"] = to_json(m.b);
  j["c"] = to_json(m.c);
  j["d"] = to_json(m.d);
  return j;
}

json to_json(const Mat2<BigInt>& m) {
  return mat_rows(m, [](const BigInt& v) { return v.str(); });
}

json to_json(const LatticeElem& g) {
  json j;
  j["i"] = g.i;
  j["delta"] = g.delta;
  j["alpha_prime"] = mat_rows(g.alpha_prime, [](const GaussInt& v) { return v.to_string(); });
  return j;
}

json to_json(const RealLatticeElem& g) {
  json j;
  j["sqrt2_pow"] = g.delta;
  j["alpha_prime"] = to_json(g.alpha_prime);
  return j;
}

json to_json(const CosetLabel& l) {
  json j;
  j["i"] = l.i;
  j["delta"] = l.delta;
  if (l.i == 2) j["epsilon"] = l.epsilon;
  return j;
}

json to_json(const H3Point& z) {
  json j;
  j["x1"] = num(z.x.real());
  j["x2"] = num(z.x.imag());
  j["y"] = num(z.y);
  return j;
}

json to_json(const H2Point& z) {
  json j;
  j["x"] = num(z.x);
  j["y"] = num(z.y);
  return j;
}

json to_json(const ReducingElement& e) {
  struct V {
    json operator()(const LatticeElem& g) const { return to_json(g); }
    json operator()(const RealLatticeElem& g) const { return to_json(g); }
    json operator()(const GMat& g) const { return mat_rows(g, [](const GaussInt& v) { return v.to_string(); }); }
    json operator()(const Mat2<BigInt>& g) const { return to_json(g); }
  };
  return std::visit(V{}, e);
}

json to_json(const ReductionResult& r) {
  json j;
  j["element"] = to_json(r.element);
  j["point"] = std::visit([](const auto& p) { return to_json(p); }, r.point);
  j["iterations"] = r.iterations;
  j["word"] = r.word;
  return j;
}

json to_json(const ZetaValue& z) {
  json j;
  j["s"] = num(z.s);
  j["value"] = num(z.value);
  j["tail_bound"] = num(z.tail_bound);
  j["cutoff"] = num(z.cutoff);
  return j;
}

json to_json(const VolumeReport& v) {
  json j;
  j["domain"] = to_string(v.kind);
  j["volume"] = num(v.volume);
  j["error"] = num(v.error);
  return j;
}

GaussInt gauss_from_json(const json& j) {
  if (j.is_number_integer()) return GaussInt(j.get<long long>());
  if (j.is_string()) return GaussInt::parse(j.get<std::string>());
  bad("expected a Gaussian integer string, got " + j.dump());
}

Cyc8 cyc8_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("b")) bad("Cyc8 object needs \"a\" and \"b\"");
    long long k = 0;
    if (j.contains("k")) {
      if (!j["k"].is_number_integer() || j["k"].get<long long>() < 0) bad("Cyc8 \"k\" must be a non-negative integer");
      k = j["k"].get<long long>();
    }
    return Cyc8(gauss_from_json(j["a"]), gauss_from_json(j["b"]), k);
  }
  return Cyc8(gauss_from_json(j));
}

CMat cmat_from_json(const json& j) { return mat_from<Cyc8>(j, cyc8_from_json); }
GMat gmat_from_json(const json& j) { return mat_from<GaussInt>(j, gauss_from_json); }

SqrtTwoMatrix sqrt2_matrix_from_json(const json& j) {
  SqrtTwoMatrix m;
  if (j.is_object() && j.contains("alpha_prime")) {
    m.num = mat_from<BigInt>(j["alpha_prime"], int_from_json);
  } else {
    m.num = mat_from<BigInt>(j, int_from_json);
  }
  if (j.is_object() && j.contains("sqrt2_pow")) {
    if (!j["sqrt2_pow"].is_number_integer()) bad("\"sqrt2_pow\" must be an integer");
    m.sqrt2_pow = j["sqrt2_pow"].get<int>();
  }
  return m;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

std::vector<double> parse_csv_doubles(std::string_view s) {
  std::vector<double> out;
  std::string cur(s);
  size_t start = 0;
  while (true) {
    size_t comma = cur.find(',', start);
    std::string tok = cur.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    while (end && *end == ' ') ++end;
    if (tok.empty() || end == tok.c_str() || *end != '\0' || !std::isfinite(v))
      bad("malformed point coordinate '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

H3Point parse_h3_point(std::string_view s) {
  auto v = parse_csv_doubles(s);
  if (v.size() != 3) bad("H3 point must be x1,x2,y");
  if (!(v[2] > 0)) bad("point needs y > 0");
  return {{v[0], v[1]}, v[2]};
}

H2Point parse_h2_point(std::string_view s) {
  auto v = parse_csv_doubles(s);
  if (v.size() == 3) {
    if (v[1] != 0.0) bad("H2 point must have x2 = 0");
    v.erase(v.begin() + 1);
  }
  if (v.size() != 2) bad("H2 point must be x,y");
  if (!(v[1] > 0)) bad("point needs y > 0");
  return {v[0], v[1]};
}

}  // namespace so3zi::io
