#pragma once

#include "so3zi/covol.hpp"
#include "so3zi/domains.hpp"
#include "so3zi/lattice.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace so3zi::io {

using json = nlohmann::ordered_json;

// 12 significant digits
std::string fmt(double v);

json to_json(const GaussInt& z);
json to_json(const Cyc8& z);  // plain string when it is a Gaussian integer
json to_json(const CMat& m);
json to_json(const GMat& m);
json to_json(const Mat2<BigInt>& m);
json to_json(const LatticeElem& g);
json to_json(const RealLatticeElem& g);
json to_json(const CosetLabel& l);
json to_json(const H3Point& z);
json to_json(const H2Point& z);
json to_json(const ReducingElement& e);
json to_json(const ReductionResult& r);
json to_json(const ZetaValue& z);
json to_json(const VolumeReport& v);

// all parsers throw std::invalid_argument on malformed input
GaussInt gauss_from_json(const json& j);
Cyc8 cyc8_from_json(const json& j);
CMat cmat_from_json(const json& j);
SqrtTwoMatrix sqrt2_matrix_from_json(const json& j);
GMat gmat_from_json(const json& j);
json parse_json(std::string_view text);

H3Point parse_h3_point(std::string_view s);  // "x1,x2,y"
H2Point parse_h2_point(std::string_view s);  // "x,y" (or "x,0,y")

}  // namespace so3zi::io
