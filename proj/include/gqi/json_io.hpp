#pragma once
// JSON wire formats: multivectors, complex matrices, Schmidt parameters,
// factorizations, and channel reports.

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gqi/cartan.hpp"
#include "gqi/channels.hpp"
#include "gqi/matrix.hpp"
#include "gqi/multivector.hpp"
#include "gqi/twoqubit.hpp"

namespace gqi {

using json = nlohmann::json;

struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw JsonError("cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw JsonError(std::string("parse error in ") + path + ": " + e.what());
  }
  return j;
}

inline json multivector_to_json(const Multivector& m) {
  json j;
  j["signature"] = {m.sig.p, m.sig.q};
  j["terms"] = json::array();
  for (auto& [mask, c] : m.terms) {
    json t;
    t["blade"] = json::array();
    for (int b = 0; b < m.sig.dim(); ++b)
      if (mask >> b & 1u) t["blade"].push_back(b + 1);
    t["coeff"] = c;
    j["terms"].push_back(t);
  }
  return j;
}

inline Multivector multivector_from_json(const json& j) {
  try {
    Signature sig{j.at("signature").at(0).get<int>(),
                  j.at("signature").at(1).get<int>()};
    Multivector m(sig);
    for (const auto& t : j.at("terms")) {
      std::vector<int> blade = t.at("blade").get<std::vector<int>>();
      for (size_t i = 0; i < blade.size(); ++i) {
        if (blade[i] < 1 || blade[i] > sig.dim())
          throw JsonError("blade index out of range");
        if (i && blade[i] <= blade[i - 1])
          throw JsonError("blade indices must be strictly ascending");
      }
      m = m + Multivector::blade(sig, blade, t.at("coeff").get<double>());
    }
    return m;
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad multivector JSON: ") + e.what());
  }
}

inline json matrix_to_json(const CMat& m) {
  json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["data"] = json::array();
  for (const auto& z : m.a) j["data"].push_back({z.real(), z.imag()});
  return j;
}

inline CMat matrix_from_json(const json& j) {
  try {
    int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    const auto& d = j.at("data");
    if (r <= 0 || c <= 0 || int(d.size()) != r * c)
      throw JsonError("matrix dimensions do not match data length");
    CMat m(r, c);
    for (int i = 0; i < r * c; ++i)
      m.a[i] = cplx(d.at(i).at(0).get<double>(), d.at(i).at(1).get<double>());
    return m;
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad matrix JSON: ") + e.what());
  }
}

inline json schmidt_params_to_json(const SchmidtParams& p) {
  return json{{"rho", p.rho},       {"phi", p.phi},       {"phi1", p.phi1},
              {"phi2", p.phi2},     {"theta1", p.theta1}, {"theta2", p.theta2},
              {"tau", p.tau},       {"sigma", p.sigma}};
}

inline SchmidtParams schmidt_params_from_json(const json& j) {
  try {
    SchmidtParams p;
    p.rho = j.at("rho").get<double>();
    p.phi = j.at("phi").get<double>();
    p.phi1 = j.at("phi1").get<double>();
    p.phi2 = j.at("phi2").get<double>();
    p.theta1 = j.at("theta1").get<double>();
    p.theta2 = j.at("theta2").get<double>();
    p.tau = j.at("tau").get<double>();
    p.sigma = j.at("sigma").get<double>();
    return p;
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad Schmidt parameter JSON: ") + e.what());
  }
}

inline json factorization_to_json(const Factorization& f) {
  json j;
  j["factors"] = json::array();
  for (const auto& fac : f.factors) {
    json terms = json::array();
    for (auto& [g, c] : fac.terms)
      terms.push_back({{"i", g.i}, {"j", g.j}, {"coeff", c}});
    j["factors"].push_back({{"terms", terms}});
  }
  j["phase"] = f.phase;
  return j;
}

inline Factorization factorization_from_json(const json& j) {
  try {
    Factorization f;
    for (const auto& fac : j.at("factors")) {
      Factor fa;
      for (const auto& t : fac.at("terms")) {
        int i = t.at("i").get<int>(), jj = t.at("j").get<int>();
        if (i < 0 || i > 3 || jj < 0 || jj > 3 || (i == 0 && jj == 0))
          throw JsonError("generator index out of range");
        fa.terms.push_back({{i, jj}, t.at("coeff").get<double>()});
      }
      f.factors.push_back(fa);
    }
    f.phase = j.value("phase", 0.0);
    return f;
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad factorization JSON: ") + e.what());
  }
}

inline json channel_report_to_json(int k, const ChoiReport& r) {
  return json{{"k", k},
              {"trace_preserving", r.trace_preserving},
              {"min_choi_eig", r.min_eig},
              {"boundary", r.boundary}};
}

}  // namespace gqi
