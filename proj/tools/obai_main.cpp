#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "obai/corpus.hpp"
#include "obai/genclient.hpp"
#include "obai/ingest.hpp"
#include "obai/parser.hpp"
#include "obai/phonology.hpp"
#include "obai/readability.hpp"
#include "obai/report.hpp"
#include "obai/stats.hpp"
#include "obai/tagger.hpp"

#ifndef OBAI_DATA_DIR
#define OBAI_DATA_DIR ""
#endif

namespace {

struct GlobalOptions {
  std::string data_dir = OBAI_DATA_DIR;
  std::string lexicon;
  std::string wordlist;
  std::string labelmap;
  std::string tagger;
  std::string parser;
  double alpha = 0.05;
  double wpm = obai::read::kDefaultWordsPerMinute;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool paper_rows = false;
  std::size_t workers = 0;
  std::string output;
};

std::string default_path(const GlobalOptions& g, const std::string& explicit_path,
                         const std::string& relative) {
  if (!explicit_path.empty()) return explicit_path;
  if (g.data_dir.empty()) return "";
  return g.data_dir + "/" + relative;
}

obai::report::Resources load_resources(const GlobalOptions& g,
                                       bool need_tagger, bool need_parser) {
  obai::report::Resources res;
  const std::string lex = default_path(g, g.lexicon, "lexicon.dict");
  const std::string words = default_path(g, g.wordlist, "easy_words.txt");
  const std::string labels = default_path(g, g.labelmap, "labelmap_ud.tsv");
  if (lex.empty() || words.empty())
    throw obai::ConfigError(
        "no data directory compiled in; pass --lexicon and --wordlist");
  res.lexicon = obai::phon::PhonLexicon::load(lex);
  res.wordlist = obai::feat::WordList::load(words);
  res.labelmap = labels.empty() ? obai::feat::LabelMap::bundled_ud()
                                : obai::feat::LabelMap::load(labels);
  const std::string tagger_path =
      default_path(g, g.tagger, "models/tagger.model");
  const std::string parser_path =
      default_path(g, g.parser, "models/parser.model");
  if (need_tagger || !g.tagger.empty())
    res.tagger = obai::tag::TaggerModel::load(tagger_path);
  if (need_parser || !g.parser.empty())
    res.parser = obai::parse::ParserModel::load(parser_path);
  res.wpm = g.wpm;
  res.test.alpha = g.alpha;
  res.paper_rows_only = g.paper_rows;
  res.workers = g.workers;
  return res;
}

void emit(const GlobalOptions& g, const std::string& content) {
  if (g.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw obai::InputError("cannot write output file: " + g.output);
  out << content;
}

std::string corpus_label_from_path(const std::string& path) {
  std::string trimmed = path;
  while (trimmed.size() > 1 && trimmed.back() == '/') trimmed.pop_back();
  std::filesystem::path p(trimmed);
  std::string label = std::filesystem::is_directory(p)
                          ? p.filename().string()
                          : p.stem().string();
  return label.empty() ? trimmed : label;
}

int run_analyze(const GlobalOptions& g, const std::vector<std::string>& paths,
                const std::string& label) {
  auto res = load_resources(g, true, true);
  obai::IngestConfig cfg;
  obai::Corpus corpus = obai::load_corpus(paths, label, cfg);
  auto analysis = obai::report::analyze_corpus(corpus, res);
  switch (obai::report::output_format_from_string(g.format)) {
    case obai::report::OutputFormat::kJson:
      emit(g, obai::report::analysis_to_json(analysis));
      break;
    case obai::report::OutputFormat::kCsv:
      emit(g, obai::report::analysis_to_csv(analysis));
      break;
    case obai::report::OutputFormat::kMarkdown:
      emit(g, obai::report::analysis_to_markdown(analysis));
      break;
  }
  return 0;
}

int run_compare(const GlobalOptions& g, const std::string& dir_a,
                const std::string& dir_b, std::string label_a,
                std::string label_b, const std::string& plot_csv) {
  auto res = load_resources(g, true, true);
  obai::IngestConfig cfg;
  if (label_a.empty()) label_a = corpus_label_from_path(dir_a);
  if (label_b.empty()) label_b = corpus_label_from_path(dir_b);
  if (label_a == label_b) label_b += "_b";
  obai::Corpus a = obai::load_corpus({dir_a}, label_a, cfg);
  obai::Corpus b = obai::load_corpus({dir_b}, label_b, cfg);
  auto analysis_a = obai::report::analyze_corpus(a, res);
  auto analysis_b = obai::report::analyze_corpus(b, res);
  auto rows = obai::report::compare_corpora(analysis_a, analysis_b, res.test,
                                            res.paper_rows_only);
  if (!plot_csv.empty()) {
    std::ofstream out(plot_csv, std::ios::binary);
    if (!out) throw obai::InputError("cannot write plot CSV: " + plot_csv);
    out << obai::report::figure_counts_csv(rows);
  }
  switch (obai::report::output_format_from_string(g.format)) {
    case obai::report::OutputFormat::kJson:
      emit(g, obai::report::comparison_to_json(rows, label_a, label_b));
      break;
    case obai::report::OutputFormat::kCsv:
      emit(g, obai::report::comparison_to_csv(rows));
      break;
    case obai::report::OutputFormat::kMarkdown:
      emit(g, obai::report::comparison_to_markdown(rows, label_a, label_b));
      break;
  }
  return 0;
}

int run_readability(const GlobalOptions& g,
                    const std::vector<std::string>& paths) {
  auto res = load_resources(g, true, false);
  res.require_parse = false;
  obai::IngestConfig cfg;
  std::vector<std::pair<std::string, obai::read::CorpusReadability>> cols;
  for (const auto& path : paths) {
    std::string label = corpus_label_from_path(path);
    obai::Corpus corpus = obai::load_corpus({path}, label, cfg);
    obai::Corpus annotated;
    annotated.label = corpus.label;
    for (const auto& doc : corpus.documents)
      annotated.documents.push_back(obai::report::ensure_annotated(doc, res));
    cols.emplace_back(label, obai::read::corpus_readability(
                                 annotated, res.lexicon, res.wordlist, g.wpm));
  }
  switch (obai::report::output_format_from_string(g.format)) {
    case obai::report::OutputFormat::kJson:
      emit(g, obai::report::readability_to_json(cols));
      break;
    case obai::report::OutputFormat::kCsv:
      emit(g, obai::report::readability_to_csv(cols));
      break;
    case obai::report::OutputFormat::kMarkdown:
      emit(g, obai::report::readability_to_markdown(cols));
      break;
  }
  return 0;
}

int run_train(const GlobalOptions& g, const std::string& kind,
              const std::string& treebank_path, const std::string& out_path,
              int epochs, const std::string& dev_path) {
  obai::Corpus treebank = obai::read_conllu(treebank_path);
  if (kind == "tagger") {
    auto model = obai::tag::train_tagger(treebank, epochs, g.seed);
    model.save(out_path);
    std::cerr << "tagger: " << model.tagset.size() << " tags, "
              << model.weights.size() << " features -> " << out_path << "\n";
    if (!dev_path.empty()) {
      obai::Corpus dev = obai::read_conllu(dev_path);
      std::cout << "dev token accuracy: "
                << obai::tag::tagging_accuracy(dev, model) << "\n";
    }
    return 0;
  }
  if (kind == "parser") {
    obai::parse::TrainStats stats;
    auto model = obai::parse::train_parser(treebank, epochs, g.seed, &stats);
    model.save(out_path);
    std::cerr << "parser: " << model.labels.size() << " labels, "
              << stats.used_sentences << " sentences used, "
              << stats.skipped_nonprojective << " non-projective skipped -> "
              << out_path << "\n";
    if (!dev_path.empty()) {
      obai::Corpus dev = obai::read_conllu(dev_path);
      std::cout << "dev unlabeled attachment: "
                << obai::parse::unlabeled_attachment(dev, model) << "\n";
    }
    return 0;
  }
  throw obai::ConfigError("unknown model kind '" + kind +
                          "' (use tagger or parser)");
}

int run_annotate(const GlobalOptions& g, const std::string& input_path) {
  auto res = load_resources(g, true, true);
  obai::IngestConfig cfg;
  std::ifstream in(input_path, std::ios::binary);
  if (!in) throw obai::InputError("cannot read file: " + input_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::filesystem::path p(input_path);
  obai::Document doc =
      obai::document_from_text(p.stem().string(), buf.str(), cfg);
  doc = obai::report::ensure_annotated(doc, res);
  emit(g, obai::to_conllu(doc));
  return 0;
}

int run_generate(const GlobalOptions& g, const std::string& prompt_file,
                 int words, const std::string& endpoint,
                 const std::string& model, const std::string& out_dir,
                 double tolerance, double temperature, int max_retries,
                 std::string api_key) {
  if (api_key.empty()) {
    const char* env = std::getenv("OBAI_API_KEY");
    if (env) api_key = env;
  }
  std::ifstream in(prompt_file, std::ios::binary);
  if (!in) throw obai::InputError("cannot read prompt file: " + prompt_file);
  std::vector<std::pair<std::string, int>> prompts;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    prompts.emplace_back(line, words);
  }
  obai::gen::GenRequest req;
  req.endpoint_url = endpoint;
  req.model_name = model;
  req.temperature = temperature;
  req.max_retries = max_retries;
  obai::Corpus corpus = obai::gen::build_matched_corpus(
      prompts, out_dir, req, api_key, tolerance);
  std::cerr << "wrote " << corpus.documents.size() << " texts to " << out_dir
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "obai: corpus stylometry toolkit (phonology, morphology, syntax, "
      "lexicon, readability, binomial comparison)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  GlobalOptions g;
  app.add_option("--data-dir", g.data_dir, "bundled data directory")
      ->capture_default_str();
  app.add_option("--lexicon", g.lexicon, "pronunciation lexicon (CMU format)");
  app.add_option("--wordlist", g.wordlist, "familiar-word list");
  app.add_option("--labelmap", g.labelmap, "dependency label map (TSV)");
  app.add_option("--tagger", g.tagger, "tagger model file");
  app.add_option("--parser", g.parser, "parser model file");
  app.add_option("--alpha", g.alpha, "significance level")
      ->capture_default_str();
  app.add_option("--wpm", g.wpm, "reading speed, words per minute")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format: json, csv, md")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "training shuffle seed")
      ->capture_default_str();
  app.add_flag("--paper-rows", g.paper_rows,
               "restrict reports to the core comparison rows");
  app.add_option("--workers", g.workers, "worker pool size (0 = auto)");
  app.add_option("-o,--output", g.output, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "feature counts and readability for one corpus");
  std::vector<std::string> analyze_paths;
  std::string analyze_label = "corpus";
  analyze->add_option("paths", analyze_paths, ".txt/.conllu files or dirs")
      ->required();
  analyze->add_option("--label", analyze_label, "corpus label");

  // compare
  auto* compare = app.add_subcommand(
      "compare", "binomial comparison of two corpora");
  std::string dir_a, dir_b, label_a, label_b, plot_csv;
  compare->add_option("corpus_a", dir_a, "first corpus (dir or file)")
      ->required();
  compare->add_option("corpus_b", dir_b, "second corpus (dir or file)")
      ->required();
  compare->add_option("--label-a", label_a, "label for the first corpus");
  compare->add_option("--label-b", label_b, "label for the second corpus");
  compare->add_option("--plot-csv", plot_csv,
                      "also write grouped counts CSV for plotting");

  // readability
  auto* readability = app.add_subcommand(
      "readability", "readability measures, one column per corpus");
  std::vector<std::string> readability_paths;
  readability->add_option("paths", readability_paths, "corpora (dirs or files)")
      ->required();

  // train
  auto* train = app.add_subcommand("train", "train a tagger or parser model");
  std::string train_kind, train_treebank, train_out, train_dev;
  int train_epochs = 12;
  train->add_option("kind", train_kind, "tagger or parser")->required();
  train->add_option("--treebank", train_treebank, "gold CoNLL-U file")
      ->required();
  train->add_option("--out", train_out, "model output path")->required();
  train->add_option("--epochs", train_epochs, "training epochs")
      ->capture_default_str();
  train->add_option("--dev", train_dev, "held-out CoNLL-U for accuracy");

  // annotate
  auto* annotate =
      app.add_subcommand("annotate", "tokenize, tag, and parse to CoNLL-U");
  std::string annotate_input;
  annotate->add_option("input", annotate_input, "UTF-8 text file")->required();

  // generate
  auto* generate = app.add_subcommand(
      "generate", "build a corpus from a chat-completions endpoint");
  std::string gen_prompts, gen_endpoint, gen_model = "gpt-3.5-turbo",
                           gen_out_dir, gen_api_key;
  int gen_words = 250, gen_max_retries = 3;
  double gen_tolerance = 20.0, gen_temperature = 1.0;
  generate->add_option("--prompts", gen_prompts, "file with one prompt per line")
      ->required();
  generate->add_option("--words", gen_words, "target word count")
      ->capture_default_str();
  generate->add_option("--endpoint", gen_endpoint, "chat-completions URL")
      ->required();
  generate->add_option("--model", gen_model, "model name")
      ->capture_default_str();
  generate->add_option("--out", gen_out_dir, "output directory")->required();
  generate->add_option("--tolerance", gen_tolerance,
                       "accepted word-count deviation, percent")
      ->capture_default_str();
  generate->add_option("--temperature", gen_temperature, "sampling temperature")
      ->capture_default_str();
  generate->add_option("--max-retries", gen_max_retries, "retry budget")
      ->capture_default_str();
  generate->add_option("--api-key", gen_api_key,
                       "API key (default: env OBAI_API_KEY)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(g, analyze_paths, analyze_label);
    if (*compare)
      return run_compare(g, dir_a, dir_b, label_a, label_b, plot_csv);
    if (*readability) return run_readability(g, readability_paths);
    if (*train)
      return run_train(g, train_kind, train_treebank, train_out, train_epochs,
                       train_dev);
    if (*annotate) return run_annotate(g, annotate_input);
    if (*generate)
      return run_generate(g, gen_prompts, gen_words, gen_endpoint, gen_model,
                          gen_out_dir, gen_tolerance, gen_temperature,
                          gen_max_retries, gen_api_key);
  } catch (const obai::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const obai::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
