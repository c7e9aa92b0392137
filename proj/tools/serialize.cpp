#include "serialize.hpp"

#include <sstream>

namespace cherednik::io {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

json to_json(const QSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return {{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

json to_json(const Line& l) {
  return {{"tau", to_json(l.tau)}, {"mu", to_json(l.mu)}, {"m", l.m}, {"a", l.a}, {"b", l.b}};
}

json to_json(const GammaResult& g) { return {{"diagram", to_json(g.diagram)}, {"j_s", g.j_s}, {"k_insert", g.k_insert}}; }

json to_json(const PointReport& r) {
  json out{{"verdict", to_string(r.verdict)},
           {"certified", json::array()},
           {"chain", json::array()},
           {"unresolved", json::array()}};
  for (const auto& w : r.certified) {
    json e{{"mu", to_json(w.mu)}, {"m", w.m}, {"source", w.source}, {"s", nullptr}, {"r", nullptr}};
    if (w.s) e["s"] = *w.s;
    if (w.r) e["r"] = *w.r;
    out["certified"].push_back(e);
  }
  for (const auto& c : r.chain) out["chain"].push_back({{"mu", to_json(c.mu)}, {"m", c.m}});
  for (const auto& u : r.unresolved) out["unresolved"].push_back({{"mu", to_json(u.mu)}, {"m", u.m}, {"flag", u.flag}});
  return out;
}

json to_json(const LengthResult& r) {
  json out{{"kind", to_string(r.kind)}};
  if (r.kind != LengthResult::Infinite) return out;
  out["first"] = r.first;
  out["step"] = r.step;
  out["s"] = r.sample_s;
  json rs = json::array(), ws = json::array();
  for (const auto& q : r.sample_r) rs.push_back(to_json(q));
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  out["r"] = rs;
  out["witnesses"] = ws;
  return out;
}

json to_json(const Resolution& r) {
  json terms = json::array();
  for (const auto& g : r.terms) terms.push_back(to_json(g.diagram));
  return {{"tau", to_json(r.tau)}, {"s", r.s},       {"sign", r.sign},
          {"r", r.r},              {"terms", terms}, {"offsets", r.offsets}};
}

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

Rational rational_from_json(const json& j) {
  Rational q(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

QSeries qseries_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QSeries(j.at("trunc").get<int>(), coeffs);
}

Line line_from_json(const json& j) {
  Line l;
  l.tau = partition_from_json(j.at("tau"));
  l.mu = partition_from_json(j.at("mu"));
  l.m = j.at("m").get<std::int64_t>();
  l.a = j.at("a").get<std::int64_t>();
  l.b = j.at("b").get<std::int64_t>();
  return l;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "Reducible") return Verdict::Reducible;
  if (s == "SimpleCertified") return Verdict::SimpleCertified;
  if (s == "Unknown") return Verdict::Unknown;
  throw DomainError("unknown verdict: " + s);
}

PointReport report_from_json(const json& j) {
  PointReport r;
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  for (const auto& e : j.at("certified")) {
    CertifiedWitness w{partition_from_json(e.at("mu")), e.at("m").get<std::int64_t>(), std::nullopt, std::nullopt,
                       e.at("source").get<std::string>()};
    if (!e.at("s").is_null()) w.s = e.at("s").get<std::int64_t>();
    if (!e.at("r").is_null()) w.r = e.at("r").get<std::int64_t>();
    r.certified.push_back(w);
  }
  for (const auto& e : j.at("chain")) r.chain.push_back({partition_from_json(e.at("mu")), e.at("m").get<std::int64_t>()});
  for (const auto& e : j.at("unresolved"))
    r.unresolved.push_back(
        {partition_from_json(e.at("mu")), e.at("m").get<std::int64_t>(), e.at("flag").get<std::string>()});
  return r;
}

std::string emit_json(const json& j) { return j.dump(); }

namespace {

bool is_int_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!e.is_number_integer()) return false;
  return true;
}

std::string inline_text(const json& j) {
  if (is_int_array(j)) {
    if (j.empty()) return "empty";
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + std::to_string(j[i].get<long long>());
    return out + ")";
  }
  if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
    const auto den = j["den"].get<std::string>();
    return j["num"].get<std::string>() + (den == "1" ? "" : "/" + den);
  }
  if (j.is_object() && j.size() == 2 && j.contains("trunc") && j.contains("coeffs")) {
    std::string out = "[";
    for (std::size_t i = 0; i < j["coeffs"].size(); ++i) out += (i ? "," : "") + j["coeffs"][i].get<std::string>();
    return out + "]";
  }
  if (j.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      out += (first ? "" : ", ") + k + "=" + inline_text(v);
      first = false;
    }
    return out + "}";
  }
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_text(j[i]);
    return out + "]";
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

}  // namespace

std::string emit_text(const json& j) {
  std::ostringstream out;
  const bool plain_object = j.is_object() && inline_text(j).front() == '{';
  if (!plain_object) {
    out << inline_text(j) << "\n";
    return out.str();
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    out << k << std::string(width - k.size() + 2, ' ');
    if (v.is_array() && !v.empty() && !is_int_array(v)) {
      out << "\n";
      for (const auto& e : v) out << "  " << inline_text(e) << "\n";
    } else {
      out << inline_text(v) << "\n";
    }
  }
  return out.str();
}

Partition parse_partition(const std::string& text) {
  if (text == "empty" || text.empty()) return Partition{};
  std::vector<int> parts;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v <= 0) throw DomainError("bad partition part '" + tok + "' in " + text);
    parts.push_back(v);
  }
  return Partition(parts);
}

}  // namespace cherednik::io
