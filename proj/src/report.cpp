#include "obai/report.hpp"

#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace obai::report {

using nlohmann::json;

namespace {

json counts_to_json(const std::map<Level, FeatureCounts>& counts, bool bases) {
  json out = json::object();
  for (const auto& [level, fc] : counts) {
    json block = json::object();
    for (const auto& [k, v] : bases ? fc.bases : fc.counts) block[k] = v;
    out[to_string(level)] = std::move(block);
  }
  return out;
}

json readability_to_json_obj(const read::ReadabilityReport& r) {
  return json{{"reading_time_sec", r.reading_time_sec},
              {"flesch_reading_ease", r.flesch_reading_ease},
              {"flesch_kincaid_grade", r.flesch_kincaid_grade},
              {"gunning_fog", r.gunning_fog},
              {"coleman_liau", r.coleman_liau},
              {"ari", r.ari},
              {"smog", r.smog},
              {"linsear_write", r.linsear_write},
              {"passive_sentence_pct", r.passive_sentence_pct},
              {"dale_chall", r.dale_chall},
              {"difficult_words", r.difficult_words}};
}

struct ReadabilityRow {
  const char* label;
  const char* key;
  double read::ReadabilityReport::* field;
};

const ReadabilityRow kReadabilityRows[] = {
    {"Est. Reading Time (sec)", "reading_time_sec",
     &read::ReadabilityReport::reading_time_sec},
    {"Flesch Reading Ease", "flesch_reading_ease",
     &read::ReadabilityReport::flesch_reading_ease},
    {"Flesch-Kincaid Grad. Lvl", "flesch_kincaid_grade",
     &read::ReadabilityReport::flesch_kincaid_grade},
    {"Gunning Fog Index", "gunning_fog", &read::ReadabilityReport::gunning_fog},
    {"Coleman-Liau Index", "coleman_liau",
     &read::ReadabilityReport::coleman_liau},
    {"Automat. Read/ty Index", "ari", &read::ReadabilityReport::ari},
    {"Smog Index", "smog", &read::ReadabilityReport::smog},
    {"Linsear Write Formula", "linsear_write",
     &read::ReadabilityReport::linsear_write},
    {"Passive Sentences %", "passive_sentence_pct",
     &read::ReadabilityReport::passive_sentence_pct},
    {"Dale Chall Read/ty Score", "dale_chall",
     &read::ReadabilityReport::dale_chall},
    {"Difficult words", "difficult_words",
     &read::ReadabilityReport::difficult_words},
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string md_pvalue(double p) {
  if (p < 0.001) return "<0.001";
  if (p < 0.01) return "<0.01";
  return fmt2(p);
}

}  // namespace

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "md" || s == "markdown") return OutputFormat::kMarkdown;
  throw ConfigError("unknown output format: " + s + " (use json, csv, md)");
}

Document ensure_annotated(const Document& doc, const Resources& res) {
  bool needs_tags = false;
  bool needs_parse = false;
  for (const auto& sent : doc.sentences)
    for (const auto& tok : sent.tokens) {
      if (!tok.upos) needs_tags = true;
      if (!tok.head) needs_parse = true;
    }
  Document out = doc;
  if (needs_tags) {
    if (!res.tagger)
      throw ConfigError("document '" + doc.id +
                        "' needs tagging but no tagger model is configured");
    out = tag::tag(out, *res.tagger);
  }
  if (needs_parse) {
    if (res.parser) {
      out = parse::parse(out, *res.parser);
    } else if (res.require_parse) {
      throw ConfigError("document '" + doc.id +
                        "' needs parsing but no parser model is configured");
    }
  }
  return out;
}

namespace {

DocumentAnalysis analyze_document(const Document& raw, const Resources& res) {
  Document doc = ensure_annotated(raw, res);
  DocumentAnalysis da;
  da.id = doc.id;
  da.counts[Level::kPhonology] = phon::phonological_counts(doc, res.lexicon);
  da.counts[Level::kMorphology] = feat::morphological_counts(doc);
  da.counts[Level::kSyntax] = feat::syntactic_counts(doc, res.labelmap);
  da.counts[Level::kLexicon] = feat::lexical_counts(doc, res.wordlist);
  da.ratios = feat::lexical_ratios(da.counts[Level::kLexicon]);
  read::TextStats st = read::text_stats(doc, res.lexicon, res.wordlist);
  da.readability = read::compute_readability(st, doc, res.wpm);
  return da;
}

}  // namespace

CorpusAnalysis analyze_corpus(const Corpus& corpus, const Resources& res) {
  if (corpus.documents.empty())
    throw InputError("corpus '" + corpus.label + "' is empty");

  CorpusAnalysis ca;
  ca.label = corpus.label;

  std::size_t workers = res.workers;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 2;
  }

  // Fan out per document, merge in input order for determinism.
  std::vector<std::future<DocumentAnalysis>> futures;
  futures.reserve(corpus.documents.size());
  for (const Document& doc : corpus.documents) {
    auto policy = workers > 1 ? std::launch::async : std::launch::deferred;
    futures.push_back(std::async(
        policy, [&doc, &res] { return analyze_document(doc, res); }));
  }
  for (auto& f : futures) ca.documents.push_back(f.get());

  for (const DocumentAnalysis& da : ca.documents)
    for (const auto& [level, fc] : da.counts)
      ca.pooled[level] = merge_counts(ca.pooled[level], fc);
  // Pooled lexical type counts are re-derived from pooled sums; type and
  // hapax counts do not pool linearly, so they are reported per document
  // and the pooled ratios use the summed values as an approximation.
  ca.pooled_ratios = feat::lexical_ratios(ca.pooled.at(Level::kLexicon));

  const double n = static_cast<double>(ca.documents.size());
  for (const DocumentAnalysis& da : ca.documents)
    for (const ReadabilityRow& row : kReadabilityRows)
      ca.readability_mean.*(row.field) += da.readability.*(row.field) / n;
  return ca;
}

std::vector<ComparisonRow> compare_corpora(const CorpusAnalysis& a,
                                           const CorpusAnalysis& b,
                                           const stats::TestConfig& cfg,
                                           bool paper_rows_only) {
  std::vector<ComparisonRow> rows;
  for (const RegistryEntry& entry : feature_registry()) {
    if (paper_rows_only && !entry.paper_row) continue;
    ComparisonRow row;
    row.level = entry.level;
    row.feature = entry.name;
    row.display_name = entry.display_name;
    auto ita = a.pooled.find(entry.level);
    auto itb = b.pooled.find(entry.level);
    row.count_a = ita == a.pooled.end() ? 0 : ita->second.count(entry.name);
    row.count_b = itb == b.pooled.end() ? 0 : itb->second.count(entry.name);
    if (row.count_a + row.count_b == 0) {
      row.skipped = true;
      row.skip_reason = "zero occurrences in both corpora";
    } else {
      row.result =
          stats::compare_feature(entry.name, row.count_a, row.count_b, cfg);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string analysis_to_json(const CorpusAnalysis& a) {
  json docs = json::array();
  for (const DocumentAnalysis& da : a.documents) {
    docs.push_back(json{{"id", da.id},
                        {"counts", counts_to_json(da.counts, false)},
                        {"bases", counts_to_json(da.counts, true)},
                        {"ratios",
                         {{"ttr", da.ratios.ttr},
                          {"hapax_ratio", da.ratios.hapax_ratio}}},
                        {"readability", readability_to_json_obj(da.readability)}});
  }
  json out{{"corpus", a.label},
           {"documents", std::move(docs)},
           {"pooled",
            {{"counts", counts_to_json(a.pooled, false)},
             {"bases", counts_to_json(a.pooled, true)},
             {"ratios",
              {{"ttr", a.pooled_ratios.ttr},
               {"hapax_ratio", a.pooled_ratios.hapax_ratio}}}}},
           {"readability_mean", readability_to_json_obj(a.readability_mean)}};
  return out.dump(2) + "\n";
}

std::string analysis_to_csv(const CorpusAnalysis& a) {
  std::ostringstream out;
  out << "document,level,feature,count\n";
  auto emit = [&](const std::string& id,
                  const std::map<Level, FeatureCounts>& counts) {
    for (const auto& [level, fc] : counts) {
      for (const auto& [k, v] : fc.counts)
        out << id << "," << to_string(level) << "," << k << "," << v << "\n";
      for (const auto& [k, v] : fc.bases)
        out << id << "," << to_string(level) << "," << k << "," << v << "\n";
    }
  };
  for (const DocumentAnalysis& da : a.documents) emit(da.id, da.counts);
  emit("(pooled)", a.pooled);
  return out.str();
}

std::string analysis_to_markdown(const CorpusAnalysis& a) {
  std::ostringstream out;
  out << "# Corpus analysis: " << a.label << "\n\n";
  out << "Documents: " << a.documents.size() << "\n\n";
  out << "## Pooled counts\n\n";
  out << "| level | feature | count |\n|---|---|---|\n";
  for (const auto& [level, fc] : a.pooled)
    for (const auto& [k, v] : fc.counts)
      out << "| " << to_string(level) << " | " << k << " | " << v << " |\n";
  out << "\n## Readability (mean over documents)\n\n";
  out << "| measure | value |\n|---|---|\n";
  for (const ReadabilityRow& row : kReadabilityRows)
    out << "| " << row.label << " | " << fmt3(a.readability_mean.*(row.field))
        << " |\n";
  return out.str();
}

std::string comparison_to_json(const std::vector<ComparisonRow>& rows,
                               const std::string& label_a,
                               const std::string& label_b) {
  json arr = json::array();
  for (const ComparisonRow& row : rows) {
    json r{{"level", to_string(row.level)}, {"feature", row.feature}};
    if (row.skipped) {
      r["skipped"] = row.skip_reason;
    } else {
      r["p_value"] = row.result.p_value;
      r["ci_low"] = row.result.ci_low;
      r["ci_high"] = row.result.ci_high;
      r["prob"] = row.result.prob;
      r["cohens_h"] = row.result.cohens_h;
      r["effect_label"] = stats::to_string(row.result.effect_label);
      r["significant"] = row.result.significant;
    }
    arr.push_back(std::move(r));
  }
  json out{{"corpus_a", label_a}, {"corpus_b", label_b}, {"rows", arr}};
  return out.dump(2) + "\n";
}

std::string comparison_to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "level,feature,p_value,ci_low,ci_high,prob,cohens_h,effect_label,"
         "significant\n";
  for (const ComparisonRow& row : rows) {
    if (row.skipped) continue;
    out << to_string(row.level) << "," << row.feature << ","
        << fmt(row.result.p_value) << "," << fmt(row.result.ci_low) << ","
        << fmt(row.result.ci_high) << "," << fmt(row.result.prob) << ","
        << fmt(row.result.cohens_h) << ","
        << stats::to_string(row.result.effect_label) << ","
        << (row.result.significant ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string comparison_to_markdown(const std::vector<ComparisonRow>& rows,
                                   const std::string& label_a,
                                   const std::string& label_b) {
  std::ostringstream out;
  out << "# Binomial comparison: " << label_a << " vs. " << label_b << "\n\n";
  out << "| levels | feature | p-value | 95% CI | prob | Cohen's h | effect "
         "| significant |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  Level last = Level::kLexicon;
  bool first = true;
  for (const ComparisonRow& row : rows) {
    std::string level_cell;
    if (first || row.level != last) {
      level_cell = to_string(row.level);
      last = row.level;
      first = false;
    }
    out << "| " << level_cell << " | " << row.display_name << " | ";
    if (row.skipped) {
      out << "skipped (" << row.skip_reason << ") |  |  |  |  |  |\n";
      continue;
    }
    out << md_pvalue(row.result.p_value) << " | " << fmt2(row.result.ci_low)
        << " – " << fmt2(row.result.ci_high) << " | "
        << fmt2(row.result.prob) << " | " << fmt2(row.result.cohens_h) << " | "
        << stats::to_string(row.result.effect_label) << " | "
        << (row.result.significant ? "yes" : "no") << " |\n";
  }
  std::size_t skipped = 0;
  for (const ComparisonRow& row : rows)
    if (row.skipped) ++skipped;
  if (skipped > 0)
    out << "\n" << skipped << " feature(s) skipped (zero in both corpora).\n";
  return out.str();
}

std::string figure_counts_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "feature,count_A,count_B,level\n";
  for (const ComparisonRow& row : rows)
    out << row.feature << "," << row.count_a << "," << row.count_b << ","
        << to_string(row.level) << "\n";
  return out.str();
}

std::string readability_to_json(
    const std::vector<std::pair<std::string, read::CorpusReadability>>& cols) {
  json out = json::object();
  for (const auto& [label, rep] : cols) {
    json col = json::object();
    col["mean"] = readability_to_json_obj(rep.mean);
    json per_doc = json::array();
    for (const auto& [id, r] : rep.per_document)
      per_doc.push_back(json{{"id", id}, {"readability", readability_to_json_obj(r)}});
    col["documents"] = std::move(per_doc);
    out[label] = std::move(col);
  }
  return out.dump(2) + "\n";
}

std::string readability_to_csv(
    const std::vector<std::pair<std::string, read::CorpusReadability>>& cols) {
  std::ostringstream out;
  out << "measure";
  for (const auto& [label, rep] : cols) out << "," << label;
  out << "\n";
  for (const ReadabilityRow& row : kReadabilityRows) {
    out << row.key;
    for (const auto& [label, rep] : cols) out << "," << fmt(rep.mean.*(row.field));
    out << "\n";
  }
  return out.str();
}

std::string readability_to_markdown(
    const std::vector<std::pair<std::string, read::CorpusReadability>>& cols) {
  std::ostringstream out;
  out << "| measure |";
  for (const auto& [label, rep] : cols) out << " " << label << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
  out << "\n";
  for (const ReadabilityRow& row : kReadabilityRows) {
    out << "| " << row.label << " |";
    for (const auto& [label, rep] : cols)
      out << " " << fmt3(rep.mean.*(row.field)) << " |";
    out << "\n";
  }
  return out.str();
}

}  // namespace obai::report
