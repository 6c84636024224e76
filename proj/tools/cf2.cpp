// cf2: command-line front end over libclusterf2's C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "clusterf2/clusterf2.h"

using nlohmann::json;

namespace {

constexpr const char* kSchema = "cluster-f2/1";

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Failure {
  cf2_status status;
  std::string message;
};

void check(cf2_status s) {
  if (s != CF2_OK) throw Failure{s, cf2_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { cf2_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <typename F>
json call_json(F&& f) {
  char* raw = nullptr;
  check(f(&raw));
  OwnedString s(raw);
  return json::parse(raw);
}

template <typename F>
std::string call_string(F&& f) {
  char* raw = nullptr;
  check(f(&raw));
  OwnedString s(raw);
  return raw;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using TriHandle = Handle<cf2_triangulation, cf2_triangulation_free>;
using TriListHandle = Handle<cf2_tri_list, cf2_tri_list_free>;
using PointListHandle = Handle<cf2_point_list, cf2_point_list_free>;
using PointHandle = Handle<cf2_point, cf2_point_free>;
using QuiverHandle = Handle<cf2_quiver, cf2_quiver_free>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{CF2_PARSE, "cannot open " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Failure{CF2_RESOURCE, "cannot write " + path};
  out << doc.dump(2) << "\n";
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// A command's result: the JSON document, plus a table for --format csv.
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;
  int exit = kOk;
};

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.doc.dump(2) << "\n";
    return;
  }
  if (out.header.empty()) {
    std::cout << "key,value\n";
    for (const auto& [k, v] : out.doc.items())
      if (!v.is_array() && !v.is_object()) std::cout << csv_cell(k) << "," << csv_cell(v) << "\n";
    return;
  }
  for (std::size_t k = 0; k < out.header.size(); ++k)
    std::cout << (k ? "," : "") << out.header[k];
  std::cout << "\n";
  for (const auto& row : out.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << csv_cell(row[k]);
    std::cout << "\n";
  }
}

json base(const char* command) { return {{"schema", kSchema}, {"command", command}}; }

std::string diagonals_cell(const json& t) {
  std::string s;
  for (const auto& d : t.at("diagonals")) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d[0].get<int>()) + "-" + std::to_string(d[1].get<int>());
  }
  return s;
}

std::string labels_cell(const json& p) {
  std::string s;
  for (const auto& v : p.at("labels")) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v.get<int>());
  }
  return s;
}

struct Globals {
  std::string format = "json";
  unsigned threads = 0;
  bool force = false;
  bool verbose = false;
};

// ---- subcommands -------------------------------------------------------

struct EnumerateOpts {
  int m = 0;
  int q = 2;
  bool points = false;
  bool nondeep = false;
  std::string emit;
};

Output run_enumerate(const EnumerateOpts& o) {
  Output out;
  out.doc = base("enumerate");
  out.doc["m"] = o.m;
  if (o.points) {
    PointListHandle list;
    check(cf2_enumerate_points(o.m, o.q, o.nondeep, list.out()));
    json body = call_json([&](char** s) { return cf2_point_list_to_json(list.get(), s); });
    out.doc["q"] = o.q;
    out.doc["kind"] = "points";
    out.doc["count"] = body["points"].size();
    out.header = {"index", "labels"};
    for (std::size_t k = 0; k < body["points"].size(); ++k)
      out.rows.push_back({k, labels_cell(body["points"][k])});
    if (!o.emit.empty()) {
      json file = base("enumerate");
      file["points"] = body["points"];
      write_file(o.emit, file);
      out.doc["emitted"] = o.emit;
    } else {
      out.doc["points"] = std::move(body["points"]);
    }
    return out;
  }
  TriListHandle list;
  check(cf2_enumerate_triangulations(o.m, list.out()));
  json body = call_json([&](char** s) { return cf2_tri_list_to_json(list.get(), s); });
  out.doc["kind"] = "triangulations";
  out.doc["count"] = body["triangulations"].size();
  out.header = {"index", "diagonals"};
  for (std::size_t k = 0; k < body["triangulations"].size(); ++k)
    out.rows.push_back({k, diagonals_cell(body["triangulations"][k])});
  if (!o.emit.empty()) {
    json file = base("enumerate");
    file["m"] = o.m;
    file["triangulations"] = body["triangulations"];
    write_file(o.emit, file);
    out.doc["emitted"] = o.emit;
  } else {
    out.doc["triangulations"] = std::move(body["triangulations"]);
  }
  return out;
}

struct ColorOpts {
  std::string file;
  std::string triangulation;
};

Output run_color(const ColorOpts& o) {
  const std::string text = !o.file.empty() ? read_file(o.file) : o.triangulation;
  if (text.empty()) throw Failure{CF2_INVALID_ARGUMENT, "give --file or --triangulation"};
  TriHandle t;
  check(cf2_triangulation_from_json(text.c_str(), t.out()));
  PointHandle p;
  check(cf2_f2_coloring(t.get(), p.out()));
  Output out;
  out.doc = base("color");
  out.doc["triangulation"] = call_json([&](char** s) { return cf2_triangulation_to_json(t.get(), s); });
  out.doc["point"] = call_json([&](char** s) { return cf2_point_to_json(p.get(), s); });
  out.header = {"diagonals", "labels"};
  out.rows.push_back({diagonals_cell(out.doc["triangulation"]), labels_cell(out.doc["point"])});
  return out;
}

struct CountOpts {
  std::string quiver;
  std::string method = "all";
  std::uint64_t seed = 0;
  bool random = false;
};

Output run_count(const CountOpts& o, const Globals& g) {
  QuiverHandle q;
  const bool is_spec = o.quiver.rfind("dynkin:", 0) == 0;
  if (is_spec)
    check(cf2_quiver_from_spec(o.quiver.c_str(), q.out()));
  else
    check(cf2_quiver_from_json(read_file(o.quiver).c_str(), q.out()));

  Output out;
  out.doc = base("count");
  out.doc["quiver"] = o.quiver;
  out.doc["mutable"] = cf2_quiver_mutable_count(q.get());
  out.doc["frozen"] = cf2_quiver_frozen_count(q.get());
  std::vector<std::string> values;
  out.header = {"method", "count"};

  if (o.method == "all" || o.method == "recursive") {
    const auto v = o.random ? call_string([&](char** s) {
      return cf2_count_recursive_random(q.get(), o.seed, s);
    })
                            : call_string([&](char** s) { return cf2_count_recursive(q.get(), s); });
    out.doc["recursive"] = v;
    out.rows.push_back({"recursive", v});
    values.push_back(v);
  }
  if (o.method == "all" || o.method == "brute") {
    std::uint64_t n = 0;
    const cf2_status s = cf2_count_bruteforce(q.get(), g.force, &n);
    if (s == CF2_RESOURCE && o.method == "all") {
      out.doc["brute_force"] = nullptr;
      out.doc["brute_force_skipped"] = cf2_last_error();
    } else {
      check(s);
      out.doc["brute_force"] = std::to_string(n);
      out.rows.push_back({"brute-force", std::to_string(n)});
      values.push_back(std::to_string(n));
    }
  }
  if ((o.method == "all" || o.method == "closed") && is_spec) {
    const char type = o.quiver[7];
    const int rank = std::stoi(o.quiver.substr(9));
    char* raw = nullptr;
    const cf2_status s = cf2_closed_form(type, rank, &raw);
    if (s == CF2_OK) {
      OwnedString keep(raw);
      out.doc["closed_form"] = std::string(raw);
      out.rows.push_back({"closed-form", std::string(raw)});
      values.push_back(raw);
    } else if (o.method == "closed") {
      check(s);
    } else {
      out.doc["closed_form"] = nullptr;
    }
  } else if (o.method == "closed") {
    throw Failure{CF2_INVALID_ARGUMENT, "closed forms need a dynkin: spec"};
  }
  bool agree = true;
  for (const auto& v : values) agree = agree && v == values.front();
  out.doc["agree"] = agree;
  out.exit = agree ? kOk : kVerifyFailed;
  return out;
}

Output run_classes(int m, const Globals& g) {
  Output out;
  out.doc = base("classes");
  out.doc["m"] = m;
  json classes = call_json([&](char** s) { return cf2_hex_classes_json(m, g.force, s); });
  out.doc["count"] = classes.size();
  out.header = {"class", "size", "point", "members"};
  for (std::size_t k = 0; k < classes.size(); ++k) {
    std::string members;
    for (const auto& t : classes[k]["members"]) members += (members.empty() ? "" : " | ") + diagonals_cell(t);
    out.rows.push_back({k, classes[k]["size"], labels_cell(classes[k]["point"]), members});
  }
  out.doc["classes"] = std::move(classes);
  return out;
}

Output run_verify_theorem(int m, const Globals& g) {
  Output out;
  out.doc = base("verify-theorem");
  json r = call_json([&](char** s) { return cf2_verify_theorem_json(m, g.force, s); });
  out.doc.update(r);
  out.doc["verdict"] = r["equal"].get<bool>() ? "equal partitions" : "partitions differ";
  out.exit = r["equal"].get<bool>() ? kOk : kVerifyFailed;
  return out;
}

struct CoverOpts {
  int m = 0;
  int q = 2;
  std::string emit;
};

Output run_cover(const CoverOpts& o, const Globals& g) {
  Output out;
  out.doc = base("cover");
  json r = call_json([&](char** s) { return cf2_upsilon_cover_json(o.m, o.q, g.verbose, g.force, s); });
  if (!o.emit.empty()) {
    TriListHandle list;
    check(cf2_upsilon_cover(o.m, o.q, g.force, list.out()));
    json body = call_json([&](char** s) { return cf2_tri_list_to_json(list.get(), s); });
    json file = base("cover");
    file["m"] = o.m;
    file["q"] = o.q;
    file["cover"] = std::move(body["triangulations"]);
    write_file(o.emit, file);
    out.doc["emitted"] = o.emit;
  }
  out.doc.update(r);
  out.exit = r["ok"].get<bool>() ? kOk : kVerifyFailed;
  return out;
}

Output run_counterexample(int q, const Globals& g) {
  Output out;
  out.doc = base("counterexample");
  json r = call_json([&](char** s) { return cf2_counterexample_json(q, g.verbose, s); });
  out.doc.update(r);
  out.exit = r["ok"].get<bool>() ? kOk : kVerifyFailed;
  return out;
}

struct VerifyCoverOpts {
  std::string file;
  int q = 2;
  int m = 0;
};

Output run_verify_cover(const VerifyCoverOpts& o, const Globals& g) {
  const std::string text = read_file(o.file);
  int m = o.m;
  if (m <= 0) {
    // An empty list still carries m at the top level.
    try {
      const json doc = json::parse(text);
      if (doc.is_object() && doc.contains("m")) m = doc["m"].get<int>();
    } catch (const json::exception&) {
    }
  }
  Output out;
  out.doc = base("verify-cover");
  out.doc["file"] = o.file;
  json r = call_json([&](char** s) { return cf2_verify_cover_json(text.c_str(), m, o.q, g.verbose, s); });
  out.doc.update(r);
  out.exit = r["covering"].get<bool>() ? kOk : kVerifyFailed;
  return out;
}

struct Table1Opts {
  std::string type = "A";
  int max_rank = 10;
};

Output run_table1(const Table1Opts& o, const Globals& g) {
  if (o.type.size() != 1) throw Failure{CF2_INVALID_PARAMETER, "--type is one of A, D, E"};
  const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0])));
  int first = 1;
  int last = o.max_rank;
  if (type == 'D') first = 4;
  if (type == 'E') {
    first = 6;
    last = std::min(last, 8);
  }
  if (type != 'A' && type != 'D' && type != 'E')
    throw Failure{CF2_INVALID_PARAMETER, "--type is one of A, D, E"};

  Output out;
  out.doc = base("table1");
  out.doc["type"] = std::string(1, type);
  out.header = {"rank", "closed_form", "recursive", "brute_force", "seeds", "agree"};
  json rows = json::array();
  bool all_agree = true;
  for (int n = first; n <= last; ++n) {
    QuiverHandle q;
    check(cf2_quiver_dynkin(type, n, q.out()));
    json row{{"rank", n}};
    std::vector<std::string> values;

    char* raw = nullptr;
    if (cf2_closed_form(type, n, &raw) == CF2_OK) {
      OwnedString keep(raw);
      row["closed_form"] = std::string(raw);
      values.push_back(raw);
    } else {
      row["closed_form"] = nullptr;
    }
    const auto rec = call_string([&](char** s) { return cf2_count_recursive(q.get(), s); });
    row["recursive"] = rec;
    values.push_back(rec);

    std::uint64_t brute = 0;
    const cf2_status s = cf2_count_bruteforce(q.get(), g.force, &brute);
    if (s == CF2_OK) {
      row["brute_force"] = std::to_string(brute);
      values.push_back(std::to_string(brute));
    } else if (s == CF2_RESOURCE) {
      row["brute_force"] = nullptr;
    } else {
      check(s);
    }

    if (cf2_seed_count(type, n, &raw) == CF2_OK) {
      OwnedString keep(raw);
      row["seeds"] = std::string(raw);
    } else {
      row["seeds"] = nullptr;
    }
    bool agree = true;
    for (const auto& v : values) agree = agree && v == values.front();
    row["agree"] = agree;
    all_agree = all_agree && agree;
    out.rows.push_back({n, row["closed_form"], row["recursive"], row["brute_force"], row["seeds"], agree});
    rows.push_back(std::move(row));
  }
  out.doc["rows"] = std::move(rows);
  out.doc["agree"] = all_agree;
  out.exit = all_agree ? kOk : kVerifyFailed;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cf2: F_2 points, triangulations and covering sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--force", g.force, "Lift resource guards");
  app.add_flag("--verbose", g.verbose, "Include full lists in reports");

  EnumerateOpts en;
  auto* enumerate = app.add_subcommand("enumerate", "List triangulations or points of X_F(m)");
  enumerate->add_option("--m", en.m, "Polygon parameter (P_{m+1})")->required();
  enumerate->add_flag("--points", en.points, "List points instead of triangulations");
  enumerate->add_option("--q", en.q, "Field size for --points")->capture_default_str();
  enumerate->add_flag("--nondeep", en.nondeep, "Drop the alternating point");
  enumerate->add_option("--emit", en.emit, "Write the list to a JSON file");

  ColorOpts co;
  auto* color = app.add_subcommand("color", "Apply c to a triangulation");
  color->add_option("--file", co.file, "Triangulation JSON file");
  color->add_option("--triangulation", co.triangulation, "Triangulation JSON text");

  CountOpts cnt;
  auto* count = app.add_subcommand("count", "Count F_2 points of an acyclic quiver");
  count->add_option("--quiver", cnt.quiver, "Quiver JSON file or dynkin:T:n")->required();
  count->add_option("--method", cnt.method, "Counting method")
      ->check(CLI::IsMember({"all", "recursive", "brute", "closed"}))
      ->capture_default_str();
  auto* seed_opt = count->add_option("--seed", cnt.seed, "Random elimination order seed");

  int classes_m = 0;
  auto* classes = app.add_subcommand("classes", "Hexagonal move classes");
  classes->add_option("--m", classes_m, "Polygon parameter")->required();

  int theorem_m = 0;
  auto* theorem = app.add_subcommand("verify-theorem", "Compare move classes with fibers of c");
  theorem->add_option("--m", theorem_m, "Polygon parameter")->required();

  CoverOpts cv;
  auto* cover = app.add_subcommand("cover", "Build and check the Upsilon cover");
  cover->add_option("--m", cv.m, "Polygon parameter")->required();
  cover->add_option("--q", cv.q, "Field size")->capture_default_str();
  cover->add_option("--emit", cv.emit, "Write the cover to a JSON file");

  int ce_q = 3;
  auto* counter = app.add_subcommand("counterexample", "Covering set that misses a q >= 3 point");
  counter->add_option("--q", ce_q, "Field size")->capture_default_str();

  VerifyCoverOpts vc;
  auto* verify_cover = app.add_subcommand("verify-cover", "Check a list of triangulations");
  verify_cover->add_option("--file", vc.file, "JSON list of triangulations")->required();
  verify_cover->add_option("--q", vc.q, "Field size")->capture_default_str();
  verify_cover->add_option("--m", vc.m, "Polygon parameter (default: from the file)");

  Table1Opts t1;
  auto* table1 = app.add_subcommand("table1", "Point and seed counts for Dynkin types");
  table1->add_option("--type", t1.type, "A, D or E")->capture_default_str();
  table1->add_option("--max-rank", t1.max_rank, "Largest rank")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  cf2_set_threads(g.threads);
  if (g.force) std::cerr << "warning: --force lifts resource guards; runs may be slow or exhaust memory\n";
  cnt.random = seed_opt->count() > 0;

  try {
    Output out;
    if (*enumerate)
      out = run_enumerate(en);
    else if (*color)
      out = run_color(co);
    else if (*count)
      out = run_count(cnt, g);
    else if (*classes)
      out = run_classes(classes_m, g);
    else if (*theorem)
      out = run_verify_theorem(theorem_m, g);
    else if (*cover)
      out = run_cover(cv, g);
    else if (*counter)
      out = run_counterexample(ce_q, g);
    else if (*verify_cover)
      out = run_verify_cover(vc, g);
    else
      out = run_table1(t1, g);
    emit(out, g.format);
    return out.exit;
  } catch (const Failure& f) {
    std::cerr << "error (" << cf2_status_name(f.status) << "): " << f.message << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    return kUsage;
  }
}
