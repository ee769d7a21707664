#include "circlepat/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "circlepat/errors.hpp"

namespace circlepat::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Positions of the characters consumed by the parser. Numbers are only
// terminated by reading one character past them, so the current position can
// already sit on the next token; the recent history lets us find where the
// value itself started.
struct Tracker {
  struct Consumed {
    char c;
    SourceLocation at;
  };
  static constexpr std::size_t kHistory = 512;

  int line = 1;
  int column = 1;
  SourceLocation last_token{1, 1};
  std::array<Consumed, kHistory> history{};
  std::size_t consumed = 0;

  void push(char c) {
    history[consumed % kHistory] = {c, {line, column}};
    ++consumed;
  }
  const Consumed& back(std::size_t k) const { return history[(consumed - 1 - k) % kHistory]; }
  std::size_t available() const { return std::min(consumed, kHistory); }

  /// Start of the number that was just lexed.
  SourceLocation number_start() const {
    auto in_number = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || std::strchr("+-.eE", c); };
    std::size_t k = 0;
    if (k < available() && !in_number(back(k).c)) ++k;  // the lookahead character
    while (k + 1 < available() && in_number(back(k + 1).c)) ++k;
    return k < available() ? back(k).at : last_token;
  }

  /// Opening quote of the string that was just lexed.
  SourceLocation string_start() const {
    for (std::size_t k = 1; k < available(); ++k) {
      if (back(k).c != '"') continue;
      std::size_t slashes = 0;
      while (k + 1 + slashes < available() && back(k + 1 + slashes).c == '\\') ++slashes;
      if (slashes % 2 == 0) return back(k).at;
    }
    return last_token;
  }

  /// First letter of true, false or null.
  SourceLocation literal_start(std::size_t length) const {
    return length - 1 < available() ? back(length - 1).at : last_token;
  }
};

class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, Tracker* t) : p_(p), t_(t) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    const char c = *p_;
    t_->push(c);
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') t_->last_token = {t_->line, t_->column};
    if (c == '\n') {
      ++t_->line;
      t_->column = 1;
    } else {
      ++t_->column;
    }
    ++p_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const CountingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_ = nullptr;
  Tracker* t_ = nullptr;
};

std::string escape_pointer_token(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// Builds the DOM through the library's own SAX builder and records where each
// value sits.
class LocatingSax {
 public:
  LocatingSax(LocatedJson& out, Tracker& tracker) : builder_(out.value, false), out_(out), tracker_(tracker) {}

  bool null() { return scalar(tracker_.literal_start(4), [&] { return builder_.null(); }); }
  bool boolean(bool v) { return scalar(tracker_.literal_start(v ? 4 : 5), [&] { return builder_.boolean(v); }); }
  bool number_integer(json::number_integer_t v) {
    return scalar(tracker_.number_start(), [&] { return builder_.number_integer(v); });
  }
  bool number_unsigned(json::number_unsigned_t v) {
    return scalar(tracker_.number_start(), [&] { return builder_.number_unsigned(v); });
  }
  bool number_float(json::number_float_t v, const json::string_t& s) {
    return scalar(tracker_.number_start(), [&] { return builder_.number_float(v, s); });
  }
  bool string(json::string_t& v) { return scalar(tracker_.string_start(), [&] { return builder_.string(v); }); }
  bool binary(json::binary_t& v) { return scalar(tracker_.last_token, [&] { return builder_.binary(v); }); }

  bool start_object(std::size_t n) {
    record();
    frames_.push_back({false, 0, {}, {}});
    return builder_.start_object(n);
  }
  bool key(json::string_t& k) {
    Frame& top = frames_.back();
    top.key = k;
    if (!top.keys.insert(k).second) out_.duplicate_keys.push_back(pointer());
    return builder_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    advance();
    return builder_.end_object();
  }
  bool start_array(std::size_t n) {
    record();
    frames_.push_back({true, 0, {}, {}});
    return builder_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    advance();
    return builder_.end_array();
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    error_ = ex.what();
    error_at_ = tracker_.last_token;
    return false;
  }

  const std::string& error() const { return error_; }
  SourceLocation error_at() const { return error_at_; }

 private:
  struct Frame {
    bool is_array;
    std::size_t index;
    std::string key;
    std::set<std::string> keys;
  };

  std::string pointer() const {
    std::string p;
    for (const Frame& f : frames_) p += "/" + (f.is_array ? std::to_string(f.index) : escape_pointer_token(f.key));
    return p;
  }
  void record() { record(tracker_.last_token); }
  void record(SourceLocation at) { out_.locations[pointer()] = at; }
  void advance() {
    if (!frames_.empty() && frames_.back().is_array) ++frames_.back().index;
  }
  template <class F>
  bool scalar(SourceLocation at, F&& build) {
    record(at);
    advance();
    return build();
  }

  nlohmann::detail::json_sax_dom_parser<json> builder_;
  LocatedJson& out_;
  Tracker& tracker_;
  std::vector<Frame> frames_;
  std::string error_;
  SourceLocation error_at_;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Collects diagnostics with positions while a document is converted.
class Diagnostics {
 public:
  Diagnostics(const LocatedJson& doc, std::string source) : doc_(doc), source_(std::move(source)) {}

  void at(const std::string& pointer, const std::string& message) {
    std::ostringstream os;
    os << source_;
    // Fall back to the nearest enclosing value that was recorded.
    std::string p = pointer;
    while (true) {
      const auto it = doc_.locations.find(p);
      if (it != doc_.locations.end()) {
        os << ":" << it->second.line << ":" << it->second.column;
        break;
      }
      if (p.empty()) break;
      p = p.substr(0, p.rfind('/'));
    }
    os << ": " << (pointer.empty() ? "" : pointer + ": ") << message;
    items_.push_back(os.str());
  }
  void general(const std::string& message) { items_.push_back(source_ + ": " + message); }

  bool empty() const { return items_.empty(); }
  std::vector<std::string> take() { return std::move(items_); }

 private:
  const LocatedJson& doc_;
  std::string source_;
  std::vector<std::string> items_;
};

std::optional<std::string> get_string(const json& obj, const std::string& field, const std::string& where,
                                      Diagnostics& diag, bool required = true) {
  const auto it = obj.find(field);
  if (it == obj.end()) {
    if (required) diag.at(where, "missing field \"" + field + "\"");
    return std::nullopt;
  }
  if (!it->is_string()) {
    diag.at(where + "/" + field, "\"" + field + "\" must be a string");
    return std::nullopt;
  }
  return it->get<std::string>();
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed, const std::string& where,
                           Diagnostics& diag) {
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) diag.at(where + "/" + escape_pointer_token(k), "unknown field \"" + k + "\"");
  }
}

std::optional<double> get_angle(const json& v, const std::string& where, Diagnostics& diag) {
  try {
    return parse_angle(v);
  } catch (const InputError& e) {
    diag.at(where, e.what());
    return std::nullopt;
  }
}

// Pointer of the value a problem-level violation refers to, when it names one.
std::string locate_violation(const std::string& msg, const PatternProblem& p) {
  auto quoted_after = [&msg](const std::string& prefix) -> std::optional<std::string> {
    if (msg.rfind(prefix, 0) != 0) return std::nullopt;
    const std::size_t end = msg.find('"', prefix.size());
    if (end == std::string::npos) return std::nullopt;
    return msg.substr(prefix.size(), end - prefix.size());
  };
  if (const auto id = quoted_after("edge \"")) {
    const auto e = p.complex.find_edge(*id);
    if (!e) return "";
    const std::string base = "/edges/" + std::to_string(*e);
    if (msg.find("D out of") != std::string::npos) return base + "/D";
    if (msg.find("side_a") != std::string::npos) return base + "/sides/0";
    if (msg.find("side_b") != std::string::npos) return base + "/sides/1";
    if (msg.find("endpoint") != std::string::npos) return base + "/endpoints";
    return base;
  }
  if (const auto id = quoted_after("face \"")) {
    if (msg.find("cone angle") != std::string::npos) return "/cone_angles/" + escape_pointer_token(*id);
    const auto f = p.complex.find_face(*id);
    return f ? "/faces/" + std::to_string(*f) : "";
  }
  return "";
}

ordered_json number_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

}  // namespace

LocatedJson parse_located(std::string_view text, std::string_view source) {
  LocatedJson out;
  Tracker tracker;
  LocatingSax sax(out, tracker);
  const CountingIterator first(text.data(), &tracker);
  const CountingIterator last(text.data() + text.size(), &tracker);
  const bool ok = json::sax_parse(first, last, &sax);
  if (!ok) {
    std::ostringstream os;
    os << source << ":" << sax.error_at().line << ":" << sax.error_at().column << ": malformed JSON: " << sax.error();
    throw InputError(os.str());
  }
  return out;
}

double parse_angle(const json& value) {
  if (value.is_number()) {
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw InputError("angle must be finite");
    return x;
  }
  if (!value.is_string()) throw InputError("angle must be a number (radians) or a string such as \"90deg\"");
  const std::string s = trim(value.get<std::string>());
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end == s.data()) throw InputError("cannot read an angle from \"" + s + "\"");
  const std::string unit = trim(std::string_view(end, static_cast<std::size_t>(s.data() + s.size() - end)));
  if (!std::isfinite(x)) throw InputError("angle must be finite");
  if (unit.empty() || unit == "rad") return x;
  if (unit == "deg") return x / 180.0 * std::numbers::pi;
  throw InputError("unknown angle unit \"" + unit + "\" (expected deg or rad)");
}

PatternProblem parse_problem(std::string_view text, std::string_view source) {
  const LocatedJson doc = parse_located(text, source);
  Diagnostics diag(doc, std::string(source));
  for (const auto& p : doc.duplicate_keys) diag.at(p, "duplicate key");

  const json& root = doc.value;
  if (!root.is_object()) {
    diag.at("", "instance must be a JSON object");
    throw InputError(diag.take());
  }
  reject_unknown_fields(root, {"name", "description", "geometry", "faces", "vertices", "edges", "cone_angles"}, "",
                        diag);

  PatternProblem problem;
  if (auto s = get_string(root, "name", "", diag, false)) problem.name = *s;
  if (auto s = get_string(root, "description", "", diag, false)) problem.description = *s;
  if (auto g = get_string(root, "geometry", "", diag)) {
    try {
      problem.geometry = geometry_from_string(*g);
    } catch (const InputError& e) {
      diag.at("/geometry", e.what());
    }
  }

  std::vector<FaceRecord> faces;
  std::set<std::string> face_ids;
  if (!root.contains("faces") || !root["faces"].is_array()) {
    diag.at("", "\"faces\" must be an array");
  } else {
    const json& arr = root["faces"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "/faces/" + std::to_string(i);
      const json& item = arr[i];
      if (!item.is_object()) {
        diag.at(where, "face must be an object");
        continue;
      }
      reject_unknown_fields(item, {"id", "n"}, where, diag);
      const auto id = get_string(item, "id", where, diag);
      if (!id) continue;
      if (!face_ids.insert(*id).second) diag.at(where + "/id", "duplicate face id \"" + *id + "\"");
      FaceRecord rec{*id, std::nullopt};
      if (item.contains("n")) {
        if (!item["n"].is_number_integer()) diag.at(where + "/n", "\"n\" must be an integer");
        else rec.side_count = item["n"].get<int>();
      }
      faces.push_back(std::move(rec));
    }
  }

  std::vector<std::string> vertices;
  if (root.contains("vertices")) {
    const json& arr = root["vertices"];
    if (!arr.is_array()) {
      diag.at("/vertices", "\"vertices\" must be an array of ids");
    } else {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "/vertices/" + std::to_string(i);
        if (!arr[i].is_string()) {
          diag.at(where, "vertex id must be a string");
          continue;
        }
        const std::string id = arr[i].get<std::string>();
        if (!seen.insert(id).second) diag.at(where, "duplicate vertex id \"" + id + "\"");
        vertices.push_back(id);
      }
    }
  }

  std::vector<EdgeRecord> edges;
  std::vector<double> intersection;
  std::set<std::string> edge_ids;
  if (!root.contains("edges") || !root["edges"].is_array()) {
    diag.at("", "\"edges\" must be an array");
  } else {
    const json& arr = root["edges"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "/edges/" + std::to_string(i);
      const json& item = arr[i];
      if (!item.is_object()) {
        diag.at(where, "edge must be an object");
        continue;
      }
      reject_unknown_fields(item, {"id", "sides", "D", "endpoints"}, where, diag);
      const auto id = get_string(item, "id", where, diag);
      if (id && !edge_ids.insert(*id).second) diag.at(where + "/id", "duplicate edge id \"" + *id + "\"");
      std::array<std::string, 2> sides;
      bool sides_ok = false;
      if (!item.contains("sides")) {
        diag.at(where, "missing field \"sides\"");
      } else if (!item["sides"].is_array() || item["sides"].size() != 2 || !item["sides"][0].is_string() ||
                 !item["sides"][1].is_string()) {
        diag.at(where + "/sides", "\"sides\" must be two face ids");
      } else {
        sides = {item["sides"][0].get<std::string>(), item["sides"][1].get<std::string>()};
        sides_ok = true;
      }
      std::optional<double> d;
      if (!item.contains("D")) diag.at(where, "missing field \"D\"");
      else d = get_angle(item["D"], where + "/D", diag);
      std::optional<std::array<std::string, 2>> ends;
      if (item.contains("endpoints")) {
        const json& ep = item["endpoints"];
        if (!ep.is_array() || ep.size() != 2 || !ep[0].is_string() || !ep[1].is_string()) {
          diag.at(where + "/endpoints", "\"endpoints\" must be two vertex ids");
        } else {
          ends = std::array<std::string, 2>{ep[0].get<std::string>(), ep[1].get<std::string>()};
        }
      }
      if (!id || !sides_ok || !d) continue;
      edges.push_back({*id, sides[0], sides[1], ends});
      intersection.push_back(*d);
    }
  }

  std::map<std::string, double> cone_by_face;
  if (!root.contains("cone_angles") || !root["cone_angles"].is_object()) {
    diag.at("", "\"cone_angles\" must be an object mapping face ids to angles");
  } else {
    for (const auto& [k, v] : root["cone_angles"].items()) {
      const std::string where = "/cone_angles/" + escape_pointer_token(k);
      if (!face_ids.count(k)) {
        diag.at(where, "cone angle given for unknown face \"" + k + "\"");
        continue;
      }
      if (auto a = get_angle(v, where, diag)) cone_by_face[k] = *a;
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!root["cone_angles"].contains(faces[i].id)) {
        diag.at("/cone_angles", "no cone angle for face \"" + faces[i].id + "\"");
      }
    }
  }
  if (!diag.empty()) throw InputError(diag.take());

  problem.complex = CellComplex(std::move(faces), std::move(edges), std::move(vertices));
  problem.intersection_angles = std::move(intersection);
  for (int f = 0; f < problem.complex.face_count(); ++f) {
    problem.cone_angles.push_back(cone_by_face.at(problem.complex.face_id(f)));
  }
  for (const auto& msg : problem.validate()) {
    if (msg.rfind("duplicate ", 0) == 0) continue;  // already reported with a position
    const std::string where = locate_violation(msg, problem);
    if (where.empty()) diag.general(msg);
    else diag.at(where, msg);
  }
  if (!diag.empty()) throw InputError(diag.take());
  return problem;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw InputError(path.string() + ": read failed");
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot open file for writing");
  out << text;
  if (!out) throw InputError(path.string() + ": write failed");
}

PatternProblem load_problem(const std::filesystem::path& path) {
  return parse_problem(read_text_file(path), path.string());
}

ordered_json problem_to_json(const PatternProblem& problem) {
  const CellComplex& cx = problem.complex;
  ordered_json doc;
  if (!problem.name.empty()) doc["name"] = problem.name;
  if (!problem.description.empty()) doc["description"] = problem.description;
  doc["geometry"] = std::string(to_string(problem.geometry));
  doc["faces"] = ordered_json::array();
  for (const FaceRecord& f : cx.face_records()) {
    ordered_json item{{"id", f.id}};
    if (f.side_count) item["n"] = *f.side_count;
    doc["faces"].push_back(std::move(item));
  }
  if (cx.vertex_count() > 0) doc["vertices"] = cx.vertex_ids();
  doc["edges"] = ordered_json::array();
  for (int e = 0; e < cx.edge_count(); ++e) {
    const EdgeRecord& r = cx.edge_records()[e];
    ordered_json item{{"id", r.id}, {"sides", {r.side_a, r.side_b}}, {"D", problem.intersection_angles[e]}};
    if (r.endpoints) item["endpoints"] = {(*r.endpoints)[0], (*r.endpoints)[1]};
    doc["edges"].push_back(std::move(item));
  }
  ordered_json cones = ordered_json::object();
  for (int f = 0; f < cx.face_count(); ++f) cones[cx.face_id(f)] = problem.cone_angles[f];
  doc["cone_angles"] = std::move(cones);
  return doc;
}

std::string emit_problem(const PatternProblem& problem) { return problem_to_json(problem).dump(2) + "\n"; }

bool same_problem(const PatternProblem& a, const PatternProblem& b) {
  if (a.geometry != b.geometry || a.name != b.name || a.description != b.description) return false;
  if (a.intersection_angles != b.intersection_angles || a.cone_angles != b.cone_angles) return false;
  const CellComplex& x = a.complex;
  const CellComplex& y = b.complex;
  if (x.vertex_ids() != y.vertex_ids()) return false;
  if (x.face_count() != y.face_count() || x.edge_count() != y.edge_count()) return false;
  for (int f = 0; f < x.face_count(); ++f) {
    if (x.face_records()[f].id != y.face_records()[f].id ||
        x.face_records()[f].side_count != y.face_records()[f].side_count) {
      return false;
    }
  }
  for (int e = 0; e < x.edge_count(); ++e) {
    const EdgeRecord& p = x.edge_records()[e];
    const EdgeRecord& q = y.edge_records()[e];
    if (p.id != q.id || p.side_a != q.side_a || p.side_b != q.side_b || p.endpoints != q.endpoints) return false;
  }
  return true;
}

ordered_json feasibility_to_json(const PatternProblem& problem, const FeasibilityReport& report) {
  const CellComplex& cx = problem.complex;
  ordered_json doc;
  doc["geometry"] = std::string(to_string(report.geometry));
  doc["status"] = std::string(to_string(report.status));
  doc["margin"] = number_or_null(report.margin);
  if (report.geometry == Geometry::Hyperbolic) doc["inflation_margin"] = number_or_null(report.inflation_margin);
  if (report.certificate) {
    ordered_json ids = ordered_json::array();
    for (const int f : report.certificate->faces) ids.push_back(cx.face_id(f));
    doc["certificate"] = {
        {"kind", report.certificate->kind == Certificate::Kind::Subset ? "subset" : "total_mismatch"},
        {"faces", std::move(ids)},
        {"slack", report.certificate->slack}};
  } else {
    doc["certificate"] = nullptr;
  }
  if (report.dual_certificate) {
    ordered_json faces = ordered_json::object();
    ordered_json edges = ordered_json::object();
    for (int f = 0; f < cx.face_count(); ++f) {
      if (report.dual_certificate->face[f] != 0.0) faces[cx.face_id(f)] = report.dual_certificate->face[f];
    }
    for (int e = 0; e < cx.edge_count(); ++e) {
      if (report.dual_certificate->edge[e] != 0.0) edges[cx.edge_id(e)] = report.dual_certificate->edge[e];
    }
    const auto objective = dual_objective(problem, *report.dual_certificate);
    doc["dual_certificate"] = {{"faces", std::move(faces)},
                               {"edges", std::move(edges)},
                               {"objective", objective ? ordered_json(*objective) : ordered_json(nullptr)}};
  } else {
    doc["dual_certificate"] = nullptr;
  }
  return doc;
}

ordered_json report_to_json(const PatternProblem& problem, const SolveReport& report,
                            const FeasibilityReport* feasibility) {
  const CellComplex& cx = problem.complex;
  ordered_json doc;
  if (!problem.name.empty()) doc["problem"] = problem.name;
  doc["geometry"] = std::string(to_string(problem.geometry));
  doc["method"] = std::string(to_string(report.method));
  doc["fell_back"] = report.fell_back;
  doc["iterations"] = report.iterations;
  doc["residual"] = report.residual;
  ordered_json radii = ordered_json::object();
  ordered_json cones = ordered_json::object();
  for (int f = 0; f < cx.face_count(); ++f) {
    radii[cx.face_id(f)] = report.radii[f];
    cones[cx.face_id(f)] = report.cone.empty() ? ordered_json(nullptr) : ordered_json(report.cone[f]);
  }
  doc["radii"] = std::move(radii);
  ordered_json angles = ordered_json::object();
  ordered_json lengths = ordered_json::object();
  for (int e = 0; e < cx.edge_count(); ++e) {
    const EdgeRecord& r = cx.edge_records()[e];
    angles[r.id] = {{"sides", {r.side_a, r.side_b}},
                    {"phi", {report.angles[CellComplex::side_of(e, 0)], report.angles[CellComplex::side_of(e, 1)]}}};
    lengths[r.id] = report.edge_lengths[e];
  }
  doc["angles"] = std::move(angles);
  doc["edge_lengths"] = std::move(lengths);
  doc["cone_angles"] = std::move(cones);
  doc["energy"] = report.energy ? ordered_json(*report.energy) : ordered_json(nullptr);
  doc["kkt_ok"] = report.kkt_ok ? ordered_json(*report.kkt_ok) : ordered_json(nullptr);
  doc["feasibility"] = feasibility ? feasibility_to_json(problem, *feasibility) : ordered_json(nullptr);
  return doc;
}

SolveReport report_from_json(const PatternProblem& problem, const json& doc) {
  const CellComplex& cx = problem.complex;
  if (!doc.is_object() || !doc.contains("radii") || !doc["radii"].is_object()) {
    throw InputError("solution: missing \"radii\" object");
  }
  std::vector<std::string> issues;
  std::vector<double> radii(cx.face_count(), 0.0);
  for (int f = 0; f < cx.face_count(); ++f) {
    const auto it = doc["radii"].find(cx.face_id(f));
    if (it == doc["radii"].end() || !it->is_number()) {
      issues.push_back("solution: no radius for face \"" + cx.face_id(f) + "\"");
      continue;
    }
    radii[f] = it->get<double>();
    if (!(radii[f] > 0.0) || !std::isfinite(radii[f])) {
      issues.push_back("solution: radius of face \"" + cx.face_id(f) + "\" must be positive and finite");
    }
  }
  if (doc["radii"].size() != static_cast<std::size_t>(cx.face_count())) {
    issues.push_back("solution: radii do not match the faces of the instance");
  }
  if (!issues.empty()) throw InputError(issues);

  SolveReport report;
  ForwardMapResult fm = forward_map(problem, RadiusAssignment{radii});
  report.radii.values = std::move(radii);
  report.angles = std::move(fm.angles);
  report.edge_lengths = std::move(fm.edge_length);
  report.cone = std::move(fm.cone);
  double worst = 0.0;
  for (int f = 0; f < cx.face_count(); ++f) worst = std::max(worst, std::abs(report.cone[f] - problem.cone_angles[f]));
  report.residual = worst;
  if (doc.contains("iterations") && doc["iterations"].is_number_integer()) report.iterations = doc["iterations"].get<int>();
  if (doc.contains("method") && doc["method"].is_string()) {
    report.method = solve_method_from_string(doc["method"].get<std::string>());
  }
  if (doc.contains("fell_back") && doc["fell_back"].is_boolean()) report.fell_back = doc["fell_back"].get<bool>();
  if (problem.geometry == Geometry::Hyperbolic) report.energy = total_energy(problem, report.angles);
  return report;
}

}  // namespace circlepat::io
