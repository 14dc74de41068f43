#include "splitword/pipeline.hpp"

#include "splitword/errors.hpp"
#include "splitword/orientation.hpp"

namespace splitword {

using nlohmann::json;

PipelineReport run_pipeline(const Graph& g) {
  PipelineReport report;
  report.graph = g;
  auto stage = [&](const char* name, bool pass) {
    report.stages.emplace_back(name, pass);
    return pass;
  };
  try {
    try {
      report.split = split_partition(g);
    } catch (const NotSplit& e) {
      report.status = PipelineStatus::NotSplit;
      report.error = e.what();
      report.certificate = Certificate{e.obstruction(), e.embedding()};
      stage("split", false);
      return report;
    }
    stage("split", report.split->is_valid_partition() && report.split->is_maximal());

    try {
      report.word = build_and_verify(*report.split);
    } catch (const NotComparability& e) {
      report.status = PipelineStatus::NotComparability;
      report.error = e.what();
      report.certificate = Certificate{e.member(), e.embedding()};
      stage("labelling", false);
      return report;
    }
    report.labelled = report.word->labelled;
    const auto& lab = report.labelled->labelling;
    const auto& cls = report.labelled->classification;
    stage("labelling", verify_properties(cls, lab.k()).empty());

    report.orientation = orientation_from_labelling(*report.split, lab, cls);
    stage("orientation", verify_transitive(g, *report.orientation));
    stage("word", report.word->all_pass());

    report.prn = prn(g);
    stage("prn", verify_prn_certificate(g, *report.prn));

    for (const auto& [name, pass] : report.stages)
      if (!pass) {
        report.status = PipelineStatus::InternalError;
        report.error = "stage '" + name + "' failed verification";
      }
  } catch (const std::exception& e) {
    report.status = PipelineStatus::InternalError;
    report.error = e.what();
  }
  return report;
}

namespace {

const char* status_name(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::Ok: return "ok";
    case PipelineStatus::InternalError: return "error";
    case PipelineStatus::NotSplit: return "not_split";
    case PipelineStatus::NotComparability: return "not_comparability";
  }
  return "?";
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

json blocks_json(const WordBlocks& b) {
  return {{"q1", b.q1}, {"q2", b.q2}, {"q3", b.q3}};
}

}  // namespace

json to_json(const IClassification& cls) {
  json records = json::array();
  for (const IRecord& r : cls.records) {
    json rec = {{"vertex", r.vertex}, {"class", to_string(r.kind)}};
    switch (r.kind) {
      case IClass::A1:
        rec["m"] = r.m();
        rec["n"] = r.n();
        break;
      case IClass::A2:
        rec["r"] = r.r();
        break;
      case IClass::A3:
        rec["l"] = r.l();
        break;
    }
    records.push_back(std::move(rec));
  }
  return {{"records", records}, {"isolated", cls.isolated}, {"d", cls.d}};
}

json to_json(const PrnResult& r) {
  json data = json::object();
  switch (r.kind) {
    case CertificateKind::CompleteGraph:
      break;
    case CertificateKind::TwoPermutationWord:
      data = {{"q1", r.q1}, {"q2", r.q2}};
      break;
    case CertificateKind::B4Embedding:
      data = {{"embedding", r.b4.map}, {"blocks", blocks_json(r.blocks)},
              {"z", r.blocks.concatenated()}};
      break;
  }
  return {{"value", r.value}, {"certificate_kind", to_string(r.kind)}, {"certificate_data", data}};
}

json to_json(const PipelineReport& report) {
  const Graph& g = report.graph;
  json out = {
      {"schema", kReportSchema},
      {"input", {{"n", g.order()}, {"edges", edges_json(g.edges())}, {"graph6", encode_graph6(g)}}},
      {"status", status_name(report.status)},
  };
  if (!report.error.empty()) out["error"] = report.error;
  if (report.certificate)
    out["certificate"] = {{"name", report.certificate->name},
                          {"embedding", report.certificate->embedding.map}};
  if (report.split)
    out["split"] = {{"clique", to_vector(report.split->clique)},
                    {"independent", to_vector(report.split->independent)}};
  if (report.labelled) {
    out["labelling"] = report.labelled->labelling.order();
    out["classification"] = to_json(report.labelled->classification);
  }
  if (report.orientation) out["orientation"] = edges_json(report.orientation->arcs());
  if (report.word) {
    const WordReport& w = *report.word;
    json word = blocks_json(w.blocks);
    word["z"] = w.z;
    word["uniformity"] = w.uniformity ? json(*w.uniformity) : json(nullptr);
    word["checks"] = {{"blocks_are_permutations", w.blocks_are_permutations},
                      {"adjacent_pairs_alternate", w.adjacent_pairs_alternate},
                      {"independent_pairs_separate", w.independent_pairs_separate},
                      {"nonadjacent_cross_separate", w.nonadjacent_cross_separate},
                      {"represents", w.represents}};
    const std::string compact = compact_digits(*report.split, w.labelled.labelling, w.z);
    if (!compact.empty()) word["compact"] = compact;
    out["word"] = std::move(word);
  }
  if (report.prn) out["prn"] = to_json(*report.prn);
  json stages = json::object();
  for (const auto& [name, pass] : report.stages) stages[name] = pass;
  out["stages"] = stages;
  return out;
}

namespace {

const Graph* named_pattern(const std::string& name) {
  for (const auto& [n, graph] : split_obstructions())
    if (n == name) return &graph;
  for (Forbidden f : kAllForbidden)
    if (to_string(f) == name) return &forbidden_graph(f);
  return nullptr;
}

}  // namespace

std::vector<std::string> reverify(const json& report) {
  std::vector<std::string> failed;
  auto check = [&](const char* name, bool ok) {
    if (!ok) failed.emplace_back(name);
  };
  try {
    if (report.at("schema").get<int>() != kReportSchema) return {"schema"};
    const int n = report.at("input").at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : report.at("input").at("edges")) edges.emplace_back(e[0], e[1]);
    const Graph g(n, edges);
    check("graph6", parse_graph6(report.at("input").at("graph6").get<std::string>()) == g);

    const std::string status = report.at("status").get<std::string>();
    if (status == "not_split" || status == "not_comparability") {
      const auto& cert = report.at("certificate");
      const Graph* pattern = named_pattern(cert.at("name").get<std::string>());
      check("certificate",
            pattern && is_induced_embedding(g, *pattern,
                                             Embedding{cert.at("embedding").get<std::vector<int>>()}));
      if (status == "not_comparability") {
        const auto& split = report.at("split");
        SplitGraph sg{g, from_vector(split.at("clique").get<std::vector<int>>()),
                      from_vector(split.at("independent").get<std::vector<int>>())};
        check("split", sg.is_valid_partition() && sg.is_maximal());
        check("certificate_family", cert.at("name") == "B1" || cert.at("name") == "B2" ||
                                        cert.at("name") == "B3");
      }
      return failed;
    }
    if (status != "ok") return {"status"};

    const auto& split = report.at("split");
    SplitGraph sg{g, from_vector(split.at("clique").get<std::vector<int>>()),
                  from_vector(split.at("independent").get<std::vector<int>>())};
    check("split", sg.is_valid_partition() && sg.is_maximal());

    CliqueLabelling lab(n, report.at("labelling").get<std::vector<int>>());
    check("labelling", lab.covers(sg.clique));
    IClassification cls = classify(sg, lab);
    check("classification", to_json(cls) == report.at("classification"));
    check("properties", verify_properties(cls, lab.k()).empty());

    Orientation d(n);
    for (const auto& a : report.at("orientation")) d.add_arc(a[0], a[1]);
    check("orientation", verify_transitive(g, d));

    const auto& word = report.at("word");
    WordBlocks blocks{word.at("q1").get<Word>(), word.at("q2").get<Word>(), word.at("q3").get<Word>()};
    const Word z = word.at("z").get<Word>();
    check("word_concatenation", blocks.concatenated() == z);
    check("word_permutations", is_permutation_of(blocks.q1, n) && is_permutation_of(blocks.q2, n) &&
                                   is_permutation_of(blocks.q3, n));
    check("word_uniformity", uniformity(z) == 3);
    check("word_represents", represents(z, g));
    check("word_matches_construction", build_word(sg, lab, cls).concatenated() == z);

    const auto& p = report.at("prn");
    PrnResult r;
    r.value = p.at("value").get<int>();
    const std::string kind = p.at("certificate_kind").get<std::string>();
    const auto& data = p.at("certificate_data");
    if (kind == "CompleteGraph") {
      r.kind = CertificateKind::CompleteGraph;
    } else if (kind == "TwoPermutationWord") {
      r.kind = CertificateKind::TwoPermutationWord;
      r.q1 = data.at("q1").get<Word>();
      r.q2 = data.at("q2").get<Word>();
    } else if (kind == "B4Embedding") {
      r.kind = CertificateKind::B4Embedding;
      r.b4 = Embedding{data.at("embedding").get<std::vector<int>>()};
      const auto& b = data.at("blocks");
      r.blocks = {b.at("q1").get<Word>(), b.at("q2").get<Word>(), b.at("q3").get<Word>()};
    } else {
      failed.emplace_back("prn_kind");
      return failed;
    }
    check("prn", verify_prn_certificate(g, r));
  } catch (const std::exception& e) {
    failed.emplace_back(std::string("malformed: ") + e.what());
  }
  return failed;
}

}  // namespace splitword
