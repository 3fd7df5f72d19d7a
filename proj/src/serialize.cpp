#include "diffortho/serialize.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace diffortho {

using nlohmann::ordered_json;

namespace {

ordered_json complex_pair(const ExtComplex& z) { return ordered_json::array({to_decimal(z.re), to_decimal(z.im)}); }

ordered_json case_fields(const Case& c) {
  ordered_json j;
  j["case"] = c.name();
  j["alpha"] = to_decimal(c.family == Family::Laguerre ? c.alpha : ExtScalar(0));
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_complex(const ExtComplex& z) {
  std::string im = to_decimal(abs(z.im) == 0 ? ExtScalar(0) : z.im);
  if (im.front() != '-') im = "+" + im;
  return to_decimal(z.re) + im + "i";
}

std::string spec_json(const MeasureSpec& spec) {
  ordered_json j = case_fields(spec.basis);
  j["rho"] = ordered_json::array();
  for (const auto& r : spec.rho) j["rho"].push_back(to_decimal(r));
  return dump(j);
}

MeasureSpec parse_spec_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorCode::Shape, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("case") || !j.contains("rho") || !j["rho"].is_array()) {
    throw Error(ErrorCode::Shape, "spec JSON needs \"case\" and \"rho\"");
  }
  auto as_scalar = [](const ordered_json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number()) return parse_scalar(v.dump());
    throw Error(ErrorCode::Shape, "expected a decimal string");
  };
  ExtScalar alpha = j.contains("alpha") ? as_scalar(j["alpha"]) : ExtScalar(0);
  std::vector<ExtScalar> rho;
  for (const auto& v : j["rho"]) rho.push_back(as_scalar(v));
  MeasureSpec spec = make_spec(parse_case(j["case"].get<std::string>(), alpha), rho);
  validate_spec(spec);
  return spec;
}

std::string poly_json(const DiffOrthoPoly& d) {
  ordered_json j = case_fields(d.spec.basis);
  j["rho"] = ordered_json::array();
  for (const auto& r : d.spec.rho) j["rho"].push_back(to_decimal(r));
  j["n"] = d.n;
  j["zeta"] = d.zeta ? ordered_json(format_complex(*d.zeta)) : ordered_json(nullptr);
  j["coeffs_basis"] = ordered_json::array();
  for (const auto& c : d.qhat.coeffs) j["coeffs_basis"].push_back(to_decimal(c));
  j["q_const"] = format_complex(d.q_const);
  return dump(j);
}

std::string flow_json(const FlowSystem& sys) {
  ordered_json j = case_fields(sys.basis);
  j["points"] = ordered_json::array();
  for (const auto& w : sys.points) j["points"].push_back(complex_pair(w));
  j["strengths"] = ordered_json::array();
  for (const auto& f : sys.strengths) j["strengths"].push_back(complex_pair(f));
  return dump(j);
}

std::string zeros_csv(const ZeroCloud& zc) {
  std::ostringstream os;
  os << "n,index,re,im,normalized,c_n\n";
  const std::string cn = to_decimal(zc.c_n);
  for (std::size_t k = 0; k < zc.zeros.size(); ++k) {
    os << zc.n << ',' << k << ',' << to_decimal(zc.zeros[k].re) << ',' << to_decimal(zc.zeros[k].im) << ','
       << (zc.normalized ? 1 : 0) << ',' << cn << '\n';
  }
  return os.str();
}

std::string curve_csv(const LevelCurve& curve) {
  std::ostringstream os;
  os.precision(17);
  os << "polyline_id,vertex_index,re,im\n";
  for (std::size_t p = 0; p < curve.polylines.size(); ++p) {
    for (std::size_t k = 0; k < curve.polylines[p].size(); ++k) {
      os << p << ',' << k << ',' << curve.polylines[p][k].real() << ',' << curve.polylines[p][k].imag() << '\n';
    }
  }
  return os.str();
}

std::string nth_root_csv(const std::vector<NthRootRow>& rows) {
  std::ostringstream os;
  os << "z,n,value,limit,rel_error\n";
  for (const auto& r : rows) {
    os << format_complex(r.z) << ',' << r.n << ',' << to_decimal(r.value) << ',' << to_decimal(r.limit) << ','
       << to_decimal(r.rel_error) << '\n';
  }
  return os.str();
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream os;
  os << "z,n,region,ratio,error\n";
  for (const auto& r : rows) {
    os << format_complex(r.z) << ',' << r.n << ',' << region_name(r.region) << ',' << format_complex(r.ratio) << ','
       << to_decimal(r.error) << '\n';
  }
  return os.str();
}

std::string field_csv(const std::vector<FieldSample>& samples) {
  std::ostringstream os;
  os << "# u + i v = conj(dV/dz); psi_stream = Im V (principal logarithms)\n";
  os << "re,im,mask,u,v,psi_stream\n";
  for (const auto& s : samples) {
    os << to_decimal(s.re) << ',' << to_decimal(s.im) << ',' << (s.masked ? 1 : 0) << ',';
    if (s.masked) {
      os << ",,\n";
    } else {
      os << to_decimal(s.u) << ',' << to_decimal(s.v) << ',' << to_decimal(s.psi) << '\n';
    }
  }
  return os.str();
}

std::string coeff_growth_csv(const std::vector<CoeffGrowthRow>& rows) {
  std::ostringstream os;
  os << "n,k,abs_b,ratio\n";
  for (const auto& r : rows) os << r.n << ',' << r.k << ',' << to_decimal(r.abs_b) << ',' << to_decimal(r.ratio) << '\n';
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Internal, "cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::Internal, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace diffortho
