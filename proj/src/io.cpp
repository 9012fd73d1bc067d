#include "capmatch/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace capmatch::io {

using Json = nlohmann::ordered_json;

namespace {

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(what + ": line " + std::to_string(line_of_byte(text, e.byte)) +
                ": " + e.what());
  }
}

}  // namespace

FirmId NamedInstance::firm_id(const std::string& name) const {
  for (std::size_t i = 0; i < firm_names.size(); ++i)
    if (firm_names[i] == name) return static_cast<FirmId>(i);
  throw Error("unknown firm '" + name + "'");
}

WorkerId NamedInstance::worker_id(const std::string& name) const {
  for (std::size_t i = 0; i < worker_names.size(); ++i)
    if (worker_names[i] == name) return static_cast<WorkerId>(i);
  throw Error("unknown worker '" + name + "'");
}

NamedInstance NamedInstance::with_default_names(Instance inst,
                                                std::string label) {
  NamedInstance named;
  for (int f = 0; f < inst.n_firms; ++f)
    named.firm_names.push_back("f" + std::to_string(f + 1));
  for (int w = 0; w < inst.n_workers; ++w)
    named.worker_names.push_back("w" + std::to_string(w + 1));
  named.inst = std::move(inst);
  named.name = std::move(label);
  return named;
}

namespace {

NamedInstance parse_instance_fields(const Json& doc);

}  // namespace

NamedInstance parse_instance(const std::string& text) {
  Json doc = parse_json(text, "instance");
  if (!doc.is_object() || !doc.contains("firms") || !doc.contains("workers"))
    throw Error("instance: expected an object with firms and workers");
  try {
    return parse_instance_fields(doc);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("instance: malformed field: ") + e.what());
  }
}

namespace {

NamedInstance parse_instance_fields(const Json& doc) {
  NamedInstance named;
  if (doc.contains("name")) named.name = doc["name"].get<std::string>();

  std::map<std::string, int> firm_ids, worker_ids;
  for (const Json& f : doc["firms"]) {
    std::string name = f.at("name").get<std::string>();
    if (!firm_ids.emplace(name, named.firm_names.size()).second)
      throw Error("instance: duplicate firm name '" + name + "'");
    named.firm_names.push_back(name);
  }
  for (const Json& w : doc["workers"]) {
    std::string name = w.at("name").get<std::string>();
    if (!worker_ids.emplace(name, named.worker_names.size()).second)
      throw Error("instance: duplicate worker name '" + name + "'");
    named.worker_names.push_back(name);
  }

  Instance inst = Instance::sized(static_cast<int>(named.firm_names.size()),
                                  static_cast<int>(named.worker_names.size()));
  int fi = 0;
  for (const Json& f : doc["firms"]) {
    int cap = f.at("capacity").get<int>();
    if (cap < 0)
      throw Error("instance: firm '" + named.firm_names[fi] +
                  "': negative capacity");
    inst.capacities[fi] = cap;
    std::string ext = f.value("extension", "lex");
    if (ext == "lex")
      inst.extensions[fi] = ExtensionKind::Lexicographic;
    else if (ext == "monotone")
      inst.extensions[fi] = ExtensionKind::StronglyMonotone;
    else
      throw Error("instance: firm '" + named.firm_names[fi] +
                  "': extension must be \"lex\" or \"monotone\"");
    for (const Json& p : f.at("prefs")) {
      auto it = worker_ids.find(p.get<std::string>());
      if (it == worker_ids.end())
        throw Error("instance: firm '" + named.firm_names[fi] +
                    "': unknown worker '" + p.get<std::string>() +
                    "' in prefs");
      inst.firm_prefs[fi].ranked.push_back(it->second);
    }
    ++fi;
  }
  int wi = 0;
  for (const Json& w : doc["workers"]) {
    for (const Json& p : w.at("prefs")) {
      auto it = firm_ids.find(p.get<std::string>());
      if (it == firm_ids.end())
        throw Error("instance: worker '" + named.worker_names[wi] +
                    "': unknown firm '" + p.get<std::string>() + "' in prefs");
      inst.worker_prefs[wi].ranked.push_back(it->second);
    }
    ++wi;
  }

  std::vector<std::string> violations = validate_instance(inst);
  if (!violations.empty()) {
    std::string msg = "instance invalid:";
    for (const std::string& v : violations) msg += " " + v + ";";
    throw Error(msg);
  }
  named.inst = std::move(inst);
  return named;
}

}  // namespace

NamedInstance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

std::string emit_instance(const NamedInstance& named) {
  Json doc = Json::object();
  if (!named.name.empty()) doc["name"] = named.name;
  doc["firms"] = Json::array();
  for (int f = 0; f < named.inst.n_firms; ++f) {
    Json jf = Json::object();
    jf["name"] = named.firm_names[f];
    jf["capacity"] = named.inst.capacities[f];
    Json prefs = Json::array();
    for (WorkerId w : named.inst.firm_prefs[f].ranked)
      prefs.push_back(named.worker_names[w]);
    jf["prefs"] = std::move(prefs);
    jf["extension"] =
        named.inst.extensions[f] == ExtensionKind::Lexicographic ? "lex"
                                                                 : "monotone";
    doc["firms"].push_back(std::move(jf));
  }
  doc["workers"] = Json::array();
  for (int w = 0; w < named.inst.n_workers; ++w) {
    Json jw = Json::object();
    jw["name"] = named.worker_names[w];
    Json prefs = Json::array();
    for (FirmId f : named.inst.worker_prefs[w].ranked)
      prefs.push_back(named.firm_names[f]);
    jw["prefs"] = std::move(prefs);
    doc["workers"].push_back(std::move(jw));
  }
  return doc.dump(2) + "\n";
}

Matching parse_matching(const std::string& text, const NamedInstance& named) {
  Json doc = parse_json(text, "matching");
  Matching mu(named.inst.n_firms, named.inst.n_workers);
  try {
    for (const Json& a : doc.at("assignments")) {
      WorkerId w = named.worker_id(a.at("worker").get<std::string>());
      FirmId f = named.firm_id(a.at("firm").get<std::string>());
      if (mu.matched(w))
        throw Error("matching: worker '" + named.worker_names[w] +
                    "' assigned twice");
      mu.assign(w, f);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("matching: malformed field: ") + e.what());
  }
  return mu;
}

Matching load_matching(const std::string& path, const NamedInstance& named) {
  return parse_matching(read_file(path), named);
}

namespace {

Json matching_json(const Matching& mu, const NamedInstance& named) {
  Json doc = Json::object();
  doc["assignments"] = Json::array();
  for (WorkerId w = 0; w < mu.n_workers(); ++w) {
    if (!mu.matched(w)) continue;
    Json a = Json::object();
    a["worker"] = named.worker_names[w];
    a["firm"] = named.firm_names[mu.firm_of(w)];
    doc["assignments"].push_back(std::move(a));
  }
  return doc;
}

void attach_label(Json& doc, const NamedInstance& named) {
  if (!named.name.empty()) doc["instance"] = named.name;
}

Json worker_names_json(const std::vector<WorkerId>& set,
                       const NamedInstance& named) {
  Json arr = Json::array();
  for (WorkerId w : set) arr.push_back(named.worker_names[w]);
  return arr;
}

}  // namespace

std::string emit_matching(const Matching& mu, const NamedInstance& named) {
  return matching_json(mu, named).dump(2) + "\n";
}

std::string emit_stability(const StabilityReport& report,
                           const NamedInstance& named) {
  Json doc = Json::object();
  attach_label(doc, named);
  doc["stable"] = report.stable;
  doc["blockers"] = Json::array();
  for (const Blocker& b : report.blockers) {
    Json jb = Json::object();
    switch (b.kind) {
      case Blocker::Kind::ByFirm:
        jb["kind"] = "firm";
        jb["firm"] = named.firm_names[b.firm];
        jb["worker"] = named.worker_names[b.worker];
        break;
      case Blocker::Kind::ByWorker:
        jb["kind"] = "worker";
        jb["worker"] = named.worker_names[b.worker];
        break;
      case Blocker::Kind::ByPair:
        jb["kind"] = "pair";
        jb["worker"] = named.worker_names[b.worker];
        jb["firm"] = named.firm_names[b.firm];
        break;
    }
    doc["blockers"].push_back(std::move(jb));
  }
  return doc.dump(2) + "\n";
}

std::string emit_plan(const PlanResult& result, const NamedInstance& named) {
  Json doc = Json::object();
  attach_label(doc, named);
  doc["feasible"] = result.feasible;
  if (!result.feasible) {
    doc["reason"] = to_string(result.reason);
  } else {
    Json caps = Json::object();
    for (int f = 0; f < named.inst.n_firms; ++f)
      caps[named.firm_names[f]] = result.new_caps[f];
    doc["capacities"] = std::move(caps);
    doc["seats_changed"] = result.seats_changed;
    doc["certificate"] = matching_json(*result.certificate, named);
  }
  return doc.dump(2) + "\n";
}

std::string emit_trace(const ProposalTrace& trace,
                       const NamedInstance& named) {
  Json doc = Json::object();
  attach_label(doc, named);
  doc["algorithm"] = trace.algo == Algo::WPDA ? "wpda" : "fpda";
  doc["rounds"] = trace.rounds;
  doc["events"] = Json::array();
  for (const ProposalTrace::Event& e : trace.events) {
    Json je = Json::object();
    je["round"] = e.round;
    je["kind"] = e.rejection ? "reject" : "propose";
    je["worker"] = named.worker_names[e.worker];
    je["firm"] = named.firm_names[e.firm];
    doc["events"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

std::string emit_analysis(const analysis::PeakReport& peak,
                          const analysis::ManipulationReport& manip,
                          const NamedInstance& named) {
  Json doc = Json::object();
  attach_label(doc, named);
  doc["firm"] = named.firm_names[peak.firm];
  doc["algorithm"] = manip.algo == Algo::WPDA ? "wpda" : "fpda";
  doc["peak"] = peak.peak;
  doc["capacity"] = peak.capacity;
  doc["regime"] = analysis::to_string(peak.regime);
  doc["at_peak_wosm"] = worker_names_json(peak.at_peak_wosm_set, named);
  doc["truthful"] = worker_names_json(manip.truthful, named);
  if (manip.add) {
    doc["add"] = Json::object();
    doc["add"]["capacity"] = manip.add->capacity;
    doc["add"]["outcome"] = worker_names_json(manip.add->outcome, named);
  } else {
    doc["add"] = nullptr;
  }
  if (manip.del) {
    doc["delete"] = Json::object();
    doc["delete"]["capacity"] = manip.del->capacity;
    doc["delete"]["outcome"] = worker_names_json(manip.del->outcome, named);
  } else {
    doc["delete"] = nullptr;
  }
  if (manip.pref) {
    doc["pref"] = Json::object();
    doc["pref"]["report"] = worker_names_json(manip.pref->report, named);
    doc["pref"]["outcome"] = worker_names_json(manip.pref->outcome, named);
  } else {
    doc["pref"] = nullptr;
  }
  doc["dominance"] = Json::array();
  const analysis::Action acts[] = {analysis::Action::Add,
                                   analysis::Action::Delete,
                                   analysis::Action::Pref};
  for (analysis::Action x : acts)
    for (analysis::Action y : acts) {
      if (x == y || !manip.beats[static_cast<int>(x)][static_cast<int>(y)])
        continue;
      Json arrow = Json::object();
      arrow["better"] = analysis::to_string(x);
      arrow["worse"] = analysis::to_string(y);
      doc["dominance"].push_back(std::move(arrow));
    }
  return doc.dump(2) + "\n";
}

std::string emit_matching_list(const std::vector<Matching>& mus,
                               const NamedInstance& named) {
  Json doc = Json::object();
  attach_label(doc, named);
  doc["count"] = mus.size();
  doc["matchings"] = Json::array();
  for (const Matching& mu : mus)
    doc["matchings"].push_back(matching_json(mu, named));
  return doc.dump(2) + "\n";
}

}  // namespace capmatch::io
