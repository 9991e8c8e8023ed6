// Copyright 2026 The bellsector Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellsector/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <json.hpp>

#include "bellsector/errors.hpp"

namespace bellsector {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::array<int, 2> cyclic_pair(Axis h) {
  switch (h) {
    case Axis::X: return {2, 3};
    case Axis::Y: return {3, 1};
    case Axis::Z: return {1, 2};
  }
  throw InvalidInput("axis out of range");
}

std::string axis_name(Axis h) {
  switch (h) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Axis axis_from_name(const std::string& name) {
  const std::string n = lower(name);
  if (n == "x" || n == "1") return Axis::X;
  if (n == "y" || n == "2") return Axis::Y;
  if (n == "z" || n == "3") return Axis::Z;
  throw InvalidInput("axis must be one of x, y, z (got \"" + name + "\")");
}

std::string bell_label_name(int mu, int nu) {
  std::string s;
  s += (mu < 0) ? '-' : '+';
  s += (nu < 0) ? '-' : '+';
  return s;
}

const Mat2& pauli(int k) {
  static const Mat2 sx = (Mat2() << 0, 1, 1, 0).finished();
  static const Mat2 sy = (Mat2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Mat2 sz = (Mat2() << 1, 0, 0, -1).finished();
  switch (k) {
    case 1: return sx;
    case 2: return sy;
    case 3: return sz;
  }
  throw InvalidInput("pauli index must be 1, 2 or 3");
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

void validate(const ModelParams& params) {
  for (int k = 0; k < 3; ++k)
    if (!std::isfinite(params.coupling[k]))
      throw InvalidInput("coupling component is not finite");
  if (!std::isfinite(params.field1) || !std::isfinite(params.field2))
    throw InvalidInput("field strength is not finite");
  const int h = axis_index(params.axis);
  if (h < 1 || h > 3) throw InvalidInput("axis out of range");
}

ReducedParams reduce(const ModelParams& params) {
  validate(params);
  const auto [i, j] = cyclic_pair(params.axis);
  ReducedParams r;
  r.B_plus = params.field1 + params.field2;
  r.B_minus = params.field1 - params.field2;
  r.Jpair_plus = params.coupling[i - 1] + params.coupling[j - 1];
  r.Jpair_minus = params.coupling[i - 1] - params.coupling[j - 1];
  r.J_axis = params.coupling[axis_index(params.axis) - 1];
  r.R_plus = std::hypot(r.B_plus, r.Jpair_minus);
  r.R_minus = std::hypot(r.B_minus, r.Jpair_plus);
  if (r.R_plus > 0.0) {
    r.b_plus = r.B_plus / r.R_plus;
    r.j_plus = r.Jpair_minus / r.R_plus;
  } else {
    r.b_plus = 0.0;
    r.j_plus = 1.0;
  }
  if (r.R_minus > 0.0) {
    r.b_minus = r.B_minus / r.R_minus;
    r.j_minus = r.Jpair_plus / r.R_minus;
  } else {
    r.b_minus = 0.0;
    r.j_minus = 1.0;
  }
  return r;
}

const Mat4& bell_basis_matrix() {
  static const Mat4 t = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 m = Mat4::Zero();
    // Columns: beta00, beta01, beta10, beta11 over |00>,|01>,|10>,|11>.
    m(0, 0) = s; m(3, 0) = s;
    m(1, 1) = s; m(2, 1) = s;
    m(0, 2) = s; m(3, 2) = -s;
    m(1, 3) = s; m(2, 3) = -s;
    return m;
  }();
  return t;
}

Vec4 bell_to_computational(const BellVector& v) {
  return bell_basis_matrix() * v;
}

BellVector computational_to_bell(const Vec4& amps) {
  return bell_basis_matrix().adjoint() * amps;
}

Mat4 to_bell_basis(const Mat4& computational_op) {
  const Mat4& t = bell_basis_matrix();
  return t.adjoint() * computational_op * t;
}

ModelParams params_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("parameter file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("parameter document must be a JSON object");

  nlohmann::json by_key;
  for (const auto& [key, value] : doc.items()) by_key[lower(key)] = value;

  const auto require = [&](const char* key) -> const nlohmann::json& {
    if (!by_key.contains(key))
      throw InvalidInput(std::string("parameter document is missing key \"") + key + "\"");
    return by_key.at(key);
  };

  ModelParams p;
  const auto& jarr = require("j");
  if (!jarr.is_array() || jarr.size() != 3)
    throw InvalidInput("\"J\" must be an array of three numbers");
  for (int k = 0; k < 3; ++k) {
    if (!jarr[k].is_number()) throw InvalidInput("\"J\" entries must be numbers");
    p.coupling[k] = jarr[k].get<double>();
  }
  const auto& b1 = require("b1");
  const auto& b2 = require("b2");
  if (!b1.is_number() || !b2.is_number())
    throw InvalidInput("\"B1\" and \"B2\" must be numbers");
  p.field1 = b1.get<double>();
  p.field2 = b2.get<double>();
  const auto& ax = require("axis");
  if (!ax.is_string()) throw InvalidInput("\"axis\" must be a string");
  p.axis = axis_from_name(ax.get<std::string>());
  validate(p);
  return p;
}

std::string params_to_json(const ModelParams& params) {
  nlohmann::json doc;
  doc["J"] = {params.coupling[0], params.coupling[1], params.coupling[2]};
  doc["B1"] = params.field1;
  doc["B2"] = params.field2;
  doc["axis"] = axis_name(params.axis);
  return doc.dump();
}

}  // namespace bellsector
