#include "chamberscope/records.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace chamberscope {

namespace {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q) {
  if (q.is_integer() && q.is_small()) return Json(q.numerator().get_si());
  return Json(q.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw RecordFormatError("expected an integer or a \"p/q\" string");
}

Json vector_to_json(const Vec<Rational>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Vec<Rational> vector_from_json(const Json& j) {
  if (!j.is_array()) throw RecordFormatError("expected an array of rationals");
  Vec<Rational> v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json parse_object(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw RecordFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw RecordFormatError("record is not a JSON object");
  return j;
}

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw RecordFormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw RecordFormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

Json genes_json(const GeneticCode& code) {
  Json genes = Json::array();
  for (const Gene& g : code.genes()) genes.push_back(Subset(g.mask, code.ground_size()).elements());
  return genes;
}

}  // namespace

std::string code_to_json(const GeneticCode& code) {
  Json j;
  j["m"] = code.ground_size();
  j["code"] = format_code(code);
  j["genes"] = genes_json(code);
  if (!code.is_chamber_type()) {
    Json marks = Json::array();
    for (const Gene& g : code.genes()) marks.push_back(g.mark == GeneMark::kShort ? "short" : "almost_short");
    j["marks"] = marks;
  }
  return j.dump();
}

GeneticCode code_from_json(std::string_view line, int m) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first != std::string_view::npos && line[first] == '<') {
    const auto last = line.find_last_not_of(" \t\r");
    return parse_code(line.substr(first, last - first + 1), m);
  }
  const Json j = parse_object(line);
  const int record_m = required<int>(j, "m");
  if (m != 0 && record_m != m) {
    throw RecordFormatError("record has m = " + std::to_string(record_m) + ", expected " + std::to_string(m));
  }
  return parse_code(required<std::string>(j, "code"), record_m);
}

std::vector<GeneticCode> read_codes(std::istream& in, int m) {
  std::vector<GeneticCode> codes;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (blank_or_comment(line)) continue;
    try {
      codes.push_back(code_from_json(line, m));
    } catch (const std::invalid_argument& e) {
      throw RecordFormatError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return codes;
}

std::string chamber_to_json(const ChamberRecord& r) {
  Json j;
  j["m"] = r.m;
  j["code"] = format_code(r.code);
  j["realizable"] = r.realizable;
  if (r.a_min) j["a_min"] = vector_to_json(*r.a_min);
  if (r.l1) j["l1"] = rational_to_json(*r.l1);
  if (r.min_x1) j["min_x1"] = r.min_x1->str();
  if (r.realizable) {
    j["in_plus_image"] = r.in_plus_image;
    j["toric"] = r.toric;
  }
  if (r.a_min_integral) j["a_min_integral"] = *r.a_min_integral;
  if (r.l1_odd) j["l1_odd"] = *r.l1_odd;
  if (r.unique_optimum) j["unique_optimum"] = *r.unique_optimum;
  if (r.plus_witness_ok) j["plus_witness_ok"] = *r.plus_witness_ok;
  if (r.toric_witness) j["toric_witness"] = vector_to_json(*r.toric_witness);
  if (r.invariants) {
    const InvariantBundle& inv = *r.invariants;
    j["betti"] = inv.betti;
    j["poincare"] = inv.poincare;
    j["r_cup"] = inv.r_cup;
    j["s"] = inv.s;
    if (inv.ring_dimensions) j["ring_dimensions"] = *inv.ring_dimensions;
  }
  return j.dump();
}

ChamberRecord chamber_from_json(std::string_view line) {
  const Json j = parse_object(line);
  ChamberRecord r;
  r.m = required<int>(j, "m");
  r.code = parse_code(required<std::string>(j, "code"), r.m);
  r.realizable = required<bool>(j, "realizable");
  if (j.contains("a_min")) r.a_min = vector_from_json(j["a_min"]);
  if (j.contains("l1")) r.l1 = rational_from_json(j["l1"]);
  if (j.contains("min_x1")) r.min_x1 = rational_from_json(j["min_x1"]);
  if (j.contains("in_plus_image")) r.in_plus_image = required<bool>(j, "in_plus_image");
  if (j.contains("toric")) r.toric = required<bool>(j, "toric");
  if (j.contains("a_min_integral")) r.a_min_integral = required<bool>(j, "a_min_integral");
  if (j.contains("l1_odd")) r.l1_odd = required<bool>(j, "l1_odd");
  if (j.contains("unique_optimum")) r.unique_optimum = required<bool>(j, "unique_optimum");
  if (j.contains("plus_witness_ok")) r.plus_witness_ok = required<bool>(j, "plus_witness_ok");
  if (j.contains("toric_witness")) r.toric_witness = vector_from_json(j["toric_witness"]);
  if (j.contains("betti")) {
    InvariantBundle inv;
    inv.betti = required<std::vector<long>>(j, "betti");
    inv.poincare = required<std::vector<long>>(j, "poincare");
    inv.r_cup = required<long>(j, "r_cup");
    inv.s = required<long>(j, "s");
    if (j.contains("ring_dimensions")) inv.ring_dimensions = required<std::vector<long>>(j, "ring_dimensions");
    r.invariants = std::move(inv);
  }
  if (r.a_min && r.a_min->size() != r.m) throw RecordFormatError("a_min has the wrong length");
  if (r.realizable && !r.a_min) throw RecordFormatError("realizable record without a_min");
  return r;
}

std::vector<ChamberRecord> read_chambers(std::istream& in) {
  std::vector<ChamberRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (blank_or_comment(line)) continue;
    try {
      out.push_back(chamber_from_json(line));
    } catch (const std::invalid_argument& e) {
      throw RecordFormatError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string stratum_to_json(const StratumRecord& r) {
  Json j;
  j["m"] = r.m;
  j["code"] = format_code(r.code);
  j["is_chamber"] = r.is_chamber;
  j["plus_image"] = format_code(r.plus_image);
  return j.dump();
}

std::string manifest_to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["m"] = m.m;
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  j["jobs"] = m.jobs;
  j["checkpoint_interval"] = m.checkpoint_interval;
  j["content_hash"] = m.content_hash;
  return j.dump(2);
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_label(std::uint64_t hash) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buffer;
}

std::string format_vector(const Vec<Rational>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v(i).str();
  }
  return out + ")";
}

std::string format_longs(const std::vector<long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string render_table(std::vector<ChamberRecord> records, TableFormat format) {
  for (const auto& r : records) {
    if (!r.invariants) throw RecordFormatError("table needs invariants for " + format_code(r.code));
  }
  std::stable_sort(records.begin(), records.end(), [](const ChamberRecord& a, const ChamberRecord& b) {
    return invariant_order(*a.invariants, *b.invariants);
  });
  std::ostringstream out;
  const char* header[] = {"code", "betti", "b2", "r_cup", "s", "a_min", "l1"};
  if (format == TableFormat::kCsv) {
    out << "code,betti,b2,r_cup,s,a_min,l1\n";
  } else {
    out << '|';
    for (const char* h : header) out << ' ' << h << " |";
    out << "\n|";
    for (std::size_t i = 0; i < std::size(header); ++i) out << "---|";
    out << '\n';
  }
  for (const auto& r : records) {
    const InvariantBundle& inv = *r.invariants;
    const long b2 = inv.betti.size() > 1 ? inv.betti[1] : 0;
    const std::string a = r.a_min ? format_vector(*r.a_min) : "";
    const std::string l1 = r.l1 ? r.l1->str() : "";
    const std::string code = format_code(r.code);
    if (format == TableFormat::kCsv) {
      out << '"' << code << "\",\"" << format_longs(inv.betti) << "\"," << b2 << ',' << inv.r_cup << ',' << inv.s
          << ",\"" << a << "\"," << l1 << '\n';
    } else {
      out << "| `" << code << "` | " << format_longs(inv.betti) << " | " << b2 << " | " << inv.r_cup << " | " << inv.s
          << " | " << a << " | " << l1 << " |\n";
    }
  }
  return out.str();
}

}  // namespace chamberscope
