#include "spv/harness.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace spv {

using nlohmann::json;

namespace {

json vec_to_json(const CVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
  return a;
}

CVec vec_from_json(const json& a) {
  CVec v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = cplx(a[i].at(0).get<double>(), a[i].at(1).get<double>());
  return v;
}

// JSON has no infinity; an unbounded ratio is written as null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_or_inf(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json optional_to_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::optional<double> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

const char* family_name(RemarkKind k) {
  switch (k) {
    case RemarkKind::remark2: return "remark2";
    case RemarkKind::remark3: return "remark3";
    case RemarkKind::remark4: return "remark4";
  }
  return "?";
}

RemarkKind family_from_name(const std::string& s) {
  if (s == "remark2") return RemarkKind::remark2;
  if (s == "remark3") return RemarkKind::remark3;
  if (s == "remark4") return RemarkKind::remark4;
  throw ConfigError("unknown family '" + s + "'");
}

std::string csv_vec(const CVec& v) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < v.size(); ++i) {
    if (i) os << ';';
    os << v(i).real() << (v(i).imag() < 0 ? "" : "+") << v(i).imag() << 'i';
  }
  return os.str();
}

std::string csv_num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

json config_to_json(const SuiteConfig& c) {
  json j{{"suite", to_string(c.suite)},
         {"n", c.n},
         {"m", c.m},
         {"samples", c.samples},
         {"degree", c.degree},
         {"k_max", c.k_max},
         {"seed", c.seed},
         {"tol", c.tol},
         {"boundary_pass", c.boundary_pass}};
  if (c.suite == SuiteId::sharpness) {
    json fams = json::array();
    for (RemarkKind k : c.sweep.families) fams.push_back(family_name(k));
    j["sweep"] = {{"families", fams},
                  {"xi", c.sweep.xi_norms},
                  {"radii", c.sweep.radii},
                  {"k", c.sweep.k ? json(*c.sweep.k) : json(nullptr)}};
  }
  return j;
}

SuiteConfig config_from_json(const json& j) {
  SuiteConfig c;
  c.suite = suite_from_string(j.at("suite").get<std::string>());
  c.n = j.at("n").get<int>();
  c.m = j.at("m").get<int>();
  c.samples = j.at("samples").get<int>();
  c.degree = j.at("degree").get<int>();
  c.k_max = j.at("k_max").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.tol = j.at("tol").get<double>();
  c.boundary_pass = j.at("boundary_pass").get<bool>();
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    c.sweep.families.clear();
    for (const auto& f : s.at("families")) c.sweep.families.push_back(family_from_name(f.get<std::string>()));
    c.sweep.xi_norms = s.at("xi").get<std::vector<double>>();
    c.sweep.radii = s.at("radii").get<std::vector<double>>();
    if (!s.at("k").is_null()) c.sweep.k = s.at("k").get<int>();
  }
  return c;
}

json record_to_json(const Record& r) {
  const BoundReport& b = r.report;
  const BoundContext& c = b.context;
  json j{{"sample", r.sample},
         {"inequality", to_string(b.id)},
         {"k", c.k},
         {"v", c.v ? json(c.v->entries()) : json(nullptr)},
         {"z", vec_to_json(c.z)},
         {"beta", c.beta ? vec_to_json(*c.beta) : json(nullptr)},
         {"map", c.map_label},
         {"lhs", b.lhs},
         {"rhs", b.rhs},
         {"slack", b.slack},
         {"ratio", finite_or_null(b.ratio)}};
  if (r.predicted) j["predicted"] = *r.predicted;
  return j;
}

Record record_from_json(const json& j) {
  BoundContext c;
  c.z = vec_from_json(j.at("z"));
  if (!j.at("beta").is_null()) c.beta = vec_from_json(j.at("beta"));
  c.k = j.at("k").get<int>();
  if (!j.at("v").is_null()) c.v = MultiIndex(j.at("v").get<std::vector<int>>());
  c.map_label = j.at("map").get<std::string>();
  BoundReport b{inequality_from_string(j.at("inequality").get<std::string>()),
                j.at("lhs").get<double>(),
                j.at("rhs").get<double>(),
                j.at("slack").get<double>(),
                number_or_inf(j.at("ratio")),
                std::move(c)};
  Record r{j.at("sample").get<int>(), std::move(b), std::nullopt};
  if (j.contains("predicted")) r.predicted = j.at("predicted").get<double>();
  return r;
}

std::string report_to_json(const Report& report) {
  const Summary& s = report.summary;
  json certs = json::array();
  for (const Certificate& c : report.certificates)
    certs.push_back({{"name", c.name},
                     {"value", c.value},
                     {"bound", c.bound},
                     {"at_least", c.at_least},
                     {"passed", c.passed()}});
  json records = json::array();
  for (const Record& r : report.records) records.push_back(record_to_json(r));
  json j{{"schema", kReportSchema},
         {"config", config_to_json(report.config)},
         {"summary",
          {{"records", s.records},
           {"min_slack", optional_to_json(s.min_slack)},
           {"min_ratio", optional_to_json(s.min_ratio)},
           {"max_ratio", optional_to_json(s.max_ratio)},
           {"failures", s.failures},
           {"tight", s.tight},
           {"failed_certificates", s.failed_certificates},
           {"passed", report.passed()}}},
         {"certificates", certs},
         {"persisted", report.persisted},
         {"records", records}};
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("report is not valid JSON: ") + e.what());
  }
  if (j.value("schema", "") != kReportSchema) throw IoError("unsupported report schema");
  Report r;
  r.config = config_from_json(j.at("config"));
  for (const auto& rj : j.at("records")) r.records.push_back(record_from_json(rj));
  for (const auto& cj : j.at("certificates"))
    r.certificates.push_back({cj.at("name").get<std::string>(), cj.at("value").get<double>(),
                              cj.at("bound").get<double>(), cj.at("at_least").get<bool>()});
  const json& s = j.at("summary");
  r.summary.records = s.at("records").get<std::size_t>();
  r.summary.min_slack = optional_from_json(s.at("min_slack"));
  r.summary.min_ratio = optional_from_json(s.at("min_ratio"));
  r.summary.max_ratio = optional_from_json(s.at("max_ratio"));
  r.summary.failures = s.at("failures").get<int>();
  r.summary.tight = s.at("tight").get<int>();
  r.summary.failed_certificates = s.at("failed_certificates").get<int>();
  r.persisted = j.at("persisted").get<std::vector<std::string>>();
  return r;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  os << "suite,sample,inequality,k_or_v,z,beta,lhs,rhs,slack,ratio\n";
  const std::string suite = to_string(report.config.suite);
  for (const Record& r : report.records) {
    const BoundReport& b = r.report;
    const BoundContext& c = b.context;
    const std::string kv = c.v ? c.v->str() : std::to_string(c.k);
    os << suite << ',' << r.sample << ',' << to_string(b.id) << ",\"" << kv << "\",\"" << csv_vec(c.z) << "\",\""
       << (c.beta ? csv_vec(*c.beta) : std::string()) << "\"," << csv_num(b.lhs) << ',' << csv_num(b.rhs) << ','
       << csv_num(b.slack) << ',' << csv_num(b.ratio) << '\n';
  }
  return os.str();
}

void emit(const Report& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << (format == ReportFormat::json ? report_to_json(report) : report_to_csv(report));
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

bool operator==(const Record& a, const Record& b) {
  const BoundReport& x = a.report;
  const BoundReport& y = b.report;
  auto same_vec = [](const std::optional<CVec>& p, const std::optional<CVec>& q) {
    if (p.has_value() != q.has_value()) return false;
    return !p || (p->size() == q->size() && *p == *q);
  };
  return a.sample == b.sample && a.predicted == b.predicted && x.id == y.id && x.lhs == y.lhs && x.rhs == y.rhs &&
         x.slack == y.slack && x.ratio == y.ratio && x.context.z.size() == y.context.z.size() &&
         x.context.z == y.context.z && same_vec(x.context.beta, y.context.beta) && x.context.k == y.context.k &&
         x.context.v == y.context.v && x.context.map_label == y.context.map_label;
}

bool operator==(const Report& a, const Report& b) {
  if (!(a.config == b.config) || a.records != b.records || a.persisted != b.persisted) return false;
  if (a.certificates.size() != b.certificates.size()) return false;
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    const Certificate& x = a.certificates[i];
    const Certificate& y = b.certificates[i];
    if (x.name != y.name || x.value != y.value || x.bound != y.bound || x.at_least != y.at_least) return false;
  }
  const Summary& s = a.summary;
  const Summary& t = b.summary;
  return s.records == t.records && s.min_slack == t.min_slack && s.min_ratio == t.min_ratio &&
         s.max_ratio == t.max_ratio && s.failures == t.failures && s.tight == t.tight &&
         s.failed_certificates == t.failed_certificates;
}

}  // namespace spv
