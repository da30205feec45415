#include "hodgesig/io/cache.hpp"
#include "hodgesig/io/commands.hpp"
#include "hodgesig/io/ingest.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace hodgesig;
using namespace hodgesig::io;

namespace {

struct Options {
  std::string config_path;
  unsigned precision_bits = 0;
  unsigned jobs = 0;
  std::string cache_dir;
  std::string output = "-";

  std::string input;
  std::string json;
  std::string q;
  std::string coeffs;
  std::string label;
  int g = 0;
  int max_factor_genus = 0;
  std::string q1, q2, places;
  std::string x, d, kind, p;
  long i = -1;
};

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

Json list_json(const std::string& text) {
  Json out = Json::array();
  for (const std::string& item : split_list(text)) {
    if (item == "real") out.push_back(item);
    else out.push_back(to_string(parse_rational(item)));
  }
  return out;
}

// Payload from --input / --json, or null when neither is given.
Json payload_from(const Options& opt) {
  if (!opt.input.empty()) return parse_document(read_input(opt.input));
  if (!opt.json.empty()) return parse_document(opt.json);
  return nullptr;
}

// A single document or newline-delimited records.
std::vector<WeilRecord> records_from_text(const std::string& text) {
  std::vector<WeilRecord> out;
  Json doc;
  bool whole = true;
  try {
    doc = parse_document(text);
  } catch (const InputError&) {
    whole = false;  // not one document: read it line by line
  }
  if (whole) {
    if (doc.is_array()) {
      for (const Json& r : doc) out.push_back(record_from_json(r));
    } else {
      out.push_back(record_from_json(doc));
    }
    return out;
  }
  std::stringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(parse_document(line)));
    } catch (const InputError& err) {
      throw InputError("line " + std::to_string(number) + ": " + err.what());
    }
  }
  if (out.empty()) throw InputError("no Weil records in input");
  return out;
}

class Runner {
 public:
  Runner(Config config) : config_(std::move(config)) {
    if (config_.cache_dir) cache_.emplace(*config_.cache_dir);
  }

  const Config& config() const { return config_; }

  // Serialized document for (command, payload), through the cache when enabled.
  std::string cached(const std::string& command, const Json& payload,
                     const std::function<Json()>& build, int indent) {
    std::string key;
    if (cache_) {
      key = cache_->key(command, payload.dump() + "\n" + fingerprint(config_) + "\n" + std::to_string(indent));
      if (auto hit = cache_->load(key)) return *hit;
    }
    std::string text = build().dump(indent);
    if (cache_) cache_->store(key, text);
    return text;
  }

 private:
  Config config_;
  std::optional<ResultCache> cache_;
};

struct Outcome {
  std::string text;  // without trailing newline
  ExitCode code = ExitCode::ok;
};

ExitCode worse(ExitCode a, ExitCode b) {
  auto rank = [](ExitCode c) {
    switch (c) {
      case ExitCode::ok: return 0;
      case ExitCode::internal: return 1;
      case ExitCode::resource: return 2;
      case ExitCode::invalid_input: return 3;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

template <class F>
Outcome guarded(const std::string& command, F&& body, int indent = 2) {
  auto failure = [&](ExitCode code, const std::string& message) {
    std::cerr << "hodge-sig " << command << ": " << message << "\n";
    return Outcome{error_document(command, code, message).dump(indent), code};
  };
  try {
    return body();
  } catch (const InputError& err) {
    return failure(ExitCode::invalid_input, err.what());
  } catch (const DomainError& err) {
    return failure(ExitCode::invalid_input, err.what());
  } catch (const ResourceError& err) {
    return failure(ExitCode::resource, err.what());
  } catch (const CertificationError& err) {
    return failure(ExitCode::resource, err.what());
  } catch (const std::exception& err) {
    return failure(ExitCode::internal, err.what());
  }
}

Outcome analyze_one(Runner& runner, const WeilRecord& record, int indent) {
  return guarded("analyze", [&] {
    std::string text = runner.cached("analyze", to_json(record),
                                     [&] { return analyze_document(record, runner.config()); }, indent);
    bool violation = has_structure_violation(Json::parse(text));
    return Outcome{text, violation ? ExitCode::internal : ExitCode::ok};
  }, indent);
}

Outcome run_analyze(Runner& runner, const Options& opt) {
  std::vector<WeilRecord> records;
  Outcome parsed = guarded("analyze", [&] {
    if (!opt.input.empty()) {
      records = records_from_text(read_input(opt.input));
    } else if (!opt.json.empty()) {
      records = records_from_text(opt.json);
    } else {
      if (opt.q.empty() || opt.coeffs.empty()) throw InputError("analyze needs --input, --json or --q with --coeffs");
      WeilRecord r;
      if (!opt.label.empty()) r.label = opt.label;
      Json doc = {{"q", opt.q}, {"coeffs", Json::array()}};
      for (const std::string& c : split_list(opt.coeffs)) doc["coeffs"].push_back(c);
      if (r.label) doc["label"] = *r.label;
      records.push_back(record_from_json(doc));
    }
    return Outcome{};
  });
  if (parsed.code != ExitCode::ok) return parsed;
  if (records.size() == 1) return analyze_one(runner, records.front(), 2);

  // Batch: workers take records by index, output is reassembled in order.
  std::vector<Outcome> results(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < records.size(); k = next++) results[k] = analyze_one(runner, records[k], -1);
  };
  unsigned threads = std::max(1u, std::min<unsigned>(runner.config().jobs, static_cast<unsigned>(records.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Outcome out;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (k) out.text += "\n";
    out.text += results[k].text;
    out.code = worse(out.code, results[k].code);
  }
  return out;
}

Outcome run_enumerate(Runner& runner, const Options& opt) {
  return guarded("enumerate", [&] {
    if (opt.q.empty() || opt.g == 0) throw InputError("enumerate needs --q and --g");
    std::optional<int> split;
    if (opt.max_factor_genus > 0) split = opt.max_factor_genus;
    Outcome out;
    for (const WeilRecord& r : enumerate_records(parse_integer(opt.q), opt.g, split, runner.config())) {
      if (!out.text.empty()) out.text += "\n";
      out.text += to_json(r).dump();
    }
    return out;
  }, -1);
}

Outcome run_payload_command(Runner& runner, const std::string& command, Json payload,
                            const std::function<Json(const Json&)>& build) {
  return guarded(command, [&] {
    return Outcome{runner.cached(command, payload, [&] { return build(payload); }, 2)};
  });
}

Json forms_payload(const Options& opt) {
  Json payload = payload_from(opt);
  if (!payload.is_null()) return payload;
  if (opt.q1.empty() || opt.q2.empty()) throw InputError("forms needs --input, --json or --q1 and --q2");
  payload = {{"q1", list_json(opt.q1)}, {"q2", list_json(opt.q2)}};
  if (!opt.places.empty()) {
    Json places = Json::array();
    for (const std::string& v : split_list(opt.places)) {
      places.push_back(v == "real" ? Json(v) : integer_to_json(parse_integer(v)));
    }
    payload["places"] = std::move(places);
  }
  return payload;
}

Json norm_payload(const Options& opt) {
  Json payload = payload_from(opt);
  if (!payload.is_null()) return payload;
  payload = Json::object();
  if (!opt.x.empty()) payload["x"] = opt.x;
  if (!opt.d.empty()) payload["d"] = opt.d;
  if (!opt.kind.empty()) payload["kind"] = opt.kind;
  if (!opt.p.empty()) payload["p"] = opt.p;
  if (opt.i >= 0) payload["i"] = opt.i;
  return payload;
}

void emit(const Outcome& outcome, const std::string& path) {
  if (path == "-") {
    std::cout << outcome.text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "hodge-sig: cannot write " << path << "\n";
    return;
  }
  out << outcome.text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for Hodge-type signature predictions on abelian fourfolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file");
  app.add_option("--precision-bits", opt.precision_bits, "initial precision of root certification");
  app.add_option("--jobs", opt.jobs, "worker threads for batches");
  app.add_option("--cache-dir", opt.cache_dir, "directory for cached result documents");
  app.add_option("--output", opt.output, "output path, - for stdout");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "input document path, - for stdin");
    sub->add_option("--json", opt.json, "input document as text");
  };
  auto* analyze = app.add_subcommand("analyze", "fourfold report for a degree-8 Weil polynomial");
  add_input(analyze);
  analyze->add_option("--q", opt.q, "field size");
  analyze->add_option("--coeffs", opt.coeffs, "ascending coefficients, comma separated");
  analyze->add_option("--label", opt.label, "record label");

  auto* enumerate = app.add_subcommand("enumerate", "stream Weil polynomials of genus g over F_q");
  enumerate->add_option("--q", opt.q, "field size")->required();
  enumerate->add_option("--g", opt.g, "genus")->required();
  enumerate->add_option("--max-factor-genus", opt.max_factor_genus,
                        "only products of Weil polynomials of at most this genus");

  auto* forms = app.add_subcommand("forms", "local invariants and isomorphy of two binary forms");
  add_input(forms);
  forms->add_option("--q1", opt.q1, "g11,g12,g22");
  forms->add_option("--q2", opt.q2, "g11,g12,g22");
  forms->add_option("--places", opt.places, "e.g. real,2,3,5");

  auto* norm = app.add_subcommand("norm", "norm membership and period norm classes");
  add_input(norm);
  norm->add_option("--x", opt.x, "element of Q_p");
  norm->add_option("--d", opt.d, "extension Q_p(sqrt d)");
  norm->add_option("--kind", opt.kind, "extension kind instead of d");
  norm->add_option("--p", opt.p, "prime");
  norm->add_option("--i", opt.i, "Hodge gap");

  auto* signature = app.add_subcommand("signature", "definiteness verdicts (motive, rank2, honda_tate)");
  add_input(signature);

  auto* ingest = app.add_subcommand("ingest", "validate newline-delimited Weil records");
  ingest->add_option("--input", opt.input, "records file")->required();

  app.add_subcommand("selftest", "internal consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::invalid_input);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Config config;
  Outcome setup = guarded(command, [&] {
    if (!opt.config_path.empty()) config = load_config(opt.config_path);
    if (opt.precision_bits) config.ladder.initial_bits = opt.precision_bits;
    if (opt.jobs) config.jobs = opt.jobs;
    if (!opt.cache_dir.empty()) config.cache_dir = opt.cache_dir;
    if (config.ladder.initial_bits < 32) throw InputError("--precision-bits must be at least 32");
    return Outcome{};
  });
  if (setup.code != ExitCode::ok) {
    emit(setup, opt.output);
    return static_cast<int>(setup.code);
  }

  std::optional<Runner> runner;
  Outcome outcome = guarded(command, [&] {
    runner.emplace(config);
    return Outcome{};
  });
  if (outcome.code == ExitCode::ok) {
    if (command == "analyze") {
      outcome = run_analyze(*runner, opt);
    } else if (command == "enumerate") {
      outcome = run_enumerate(*runner, opt);
    } else if (command == "forms") {
      Json payload;
      outcome = guarded(command, [&] { payload = forms_payload(opt); return Outcome{}; });
      if (outcome.code == ExitCode::ok) outcome = run_payload_command(*runner, command, payload, forms_document);
    } else if (command == "norm") {
      Json payload;
      outcome = guarded(command, [&] { payload = norm_payload(opt); return Outcome{}; });
      if (outcome.code == ExitCode::ok) outcome = run_payload_command(*runner, command, payload, norm_document);
    } else if (command == "signature") {
      Json payload;
      outcome = guarded(command, [&] {
        payload = payload_from(opt);
        if (payload.is_null()) throw InputError("signature needs --input or --json");
        return Outcome{};
      });
      if (outcome.code == ExitCode::ok) outcome = run_payload_command(*runner, command, payload, signature_document);
    } else if (command == "ingest") {
      outcome = guarded(command, [&] { return Outcome{to_json(ingest_file(opt.input)).dump(2)}; });
    } else {
      outcome = guarded(command, [&] {
        Json doc = selftest_document(runner->config());
        return Outcome{doc.dump(2), doc["passed"].get<bool>() ? ExitCode::ok : ExitCode::internal};
      });
    }
  }
  emit(outcome, opt.output);
  return static_cast<int>(outcome.code);
}
