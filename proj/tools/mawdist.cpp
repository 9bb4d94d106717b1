#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mawdist/fasta.hpp"
#include "mawdist/matrix.hpp"
#include "mawdist/maw.hpp"
#include "mawdist/neighbor_joining.hpp"
#include "mawdist/phylip.hpp"
#include "mawdist/simulate.hpp"
#include "mawdist/tree.hpp"

namespace {

std::vector<maw::Sequence> load_fasta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return maw::parse_fasta(in);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

maw::Alphabet pick_alphabet(const std::string& choice,
                            const std::vector<maw::Sequence>& seqs) {
  if (choice == "dna") return maw::Alphabet::dna();
  if (choice == "auto") return maw::Alphabet::from_sequences(seqs);
  throw std::runtime_error("unknown alphabet: " + choice);
}

int32_t default_workers(int32_t flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("MAWDIST_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

int cmd_dist(const std::string& fasta_path, const std::string& out_path,
             bool circular, int32_t max_len, int32_t workers,
             const std::string& alphabet_choice, bool lenient) {
  auto seqs = load_fasta(fasta_path);
  maw::Alphabet alphabet = pick_alphabet(alphabet_choice, seqs);

  if (lenient) {
    size_t stripped_total = 0;
    for (auto& s : seqs) {
      size_t stripped = 0;
      auto codes = maw::encode(s.symbols, alphabet, true, &stripped);
      if (stripped) {
        std::string kept;
        kept.reserve(codes.size());
        for (int32_t c : codes) kept += alphabet.letter(c);
        s.symbols = std::move(kept);
      }
      stripped_total += stripped;
    }
    if (stripped_total)
      std::cerr << "warning: stripped " << stripped_total
                << " out-of-alphabet symbols\n";
  }

  maw::MatrixOptions opt;
  opt.mode = circular ? maw::CompareMode::circular : maw::CompareMode::linear;
  if (max_len > 0) opt.max_len = max_len;
  opt.workers = default_workers(workers);
  opt.progress = [](size_t done, size_t total) {
    std::fprintf(stderr, "\rpair %zu/%zu", done, total);
    if (done == total) std::fputc('\n', stderr);
  };

  auto m = maw::pairwise_matrix(seqs, alphabet, opt);
  auto out = open_out(out_path);
  maw::write_phylip(m, out);
  return 0;
}

int cmd_maw(const std::string& fasta_path, const std::string& out_dir,
            bool circular, const std::string& alphabet_choice) {
  auto seqs = load_fasta(fasta_path);
  maw::Alphabet alphabet = pick_alphabet(alphabet_choice, seqs);
  std::filesystem::create_directories(out_dir);
  for (const auto& s : seqs) {
    auto codes = maw::encode(s.symbols, alphabet);
    maw::MawSet set = circular ? maw::circular_maws(codes, alphabet)
                               : maw::compute_maws(std::move(codes), alphabet);
    auto out = open_out(out_dir + "/" + s.id + ".maw");
    for (const auto& w : set.decoded_words()) out << w << '\n';
  }
  return 0;
}

int cmd_simulate(int32_t taxa, int32_t len, double sub, double del, double ins,
                 uint64_t seed, const std::string& out_path,
                 const std::string& tree_path) {
  maw::SimParams p{taxa, len, sub, del, ins, seed};
  auto res = maw::simulate_dataset(p);
  auto out = open_out(out_path);
  maw::write_fasta(res.sequences, out);
  if (!tree_path.empty()) {
    auto tout = open_out(tree_path);
    tout << maw::to_newick(res.tree) << '\n';
  }
  return 0;
}

int cmd_rotate(const std::string& fasta_path, uint64_t seed,
               const std::string& out_path) {
  auto seqs = maw::rotate_randomly(load_fasta(fasta_path), seed);
  auto out = open_out(out_path);
  maw::write_fasta(seqs, out);
  return 0;
}

int cmd_nj(const std::string& phylip_path, const std::string& out_path) {
  std::ifstream in(phylip_path);
  if (!in) throw std::runtime_error("cannot open " + phylip_path);
  auto m = maw::parse_phylip(in);
  auto out = open_out(out_path);
  out << maw::to_newick(maw::neighbor_joining(m)) << '\n';
  return 0;
}

int cmd_eval(const std::string& true_path, const std::string& inferred_path) {
  auto read_all = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  maw::Tree truth = maw::parse_newick(read_all(true_path));
  maw::Tree inferred = maw::parse_newick(read_all(inferred_path));
  const int32_t rf = maw::rf_distance(truth, inferred);
  std::printf("rf %d\n", rf);
  std::printf("accuracy %.6f\n", maw::rf_accuracy(inferred, truth));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alignment-free sequence comparison via minimal absent words"};
  app.require_subcommand(1);

  std::string fasta, output, tree_path, alphabet_choice = "auto";
  std::string true_path, inferred_path;
  bool circular = false, lenient = false;
  int32_t max_len = 0, workers = 0;
  int32_t taxa = 0, len = 0;
  double sub = 0.0, del = 0.0, ins = 0.0;
  uint64_t seed = 0;

  auto* dist = app.add_subcommand("dist", "pairwise LW distance matrix");
  dist->add_option("fasta", fasta, "input MultiFASTA")->required();
  dist->add_flag("--circular", circular, "compare as circular sequences");
  dist->add_option("--max-len", max_len, "ignore MAWs longer than this");
  dist->add_option("--workers", workers,
                   "worker threads (default: MAWDIST_WORKERS or 1)");
  dist->add_option("--alphabet", alphabet_choice, "dna|auto");
  dist->add_flag("--lenient", lenient, "strip out-of-alphabet symbols");
  dist->add_option("-o,--output", output, "PHYLIP output path")->required();

  auto* mawc = app.add_subcommand("maw", "dump per-sequence MAW sets");
  mawc->add_option("fasta", fasta, "input MultiFASTA")->required();
  mawc->add_flag("--circular", circular, "circular MAW sets");
  mawc->add_option("--alphabet", alphabet_choice, "dna|auto");
  mawc->add_option("-o,--output", output, "output directory")->required();

  auto* sim = app.add_subcommand("simulate", "simulate a dataset and tree");
  sim->add_option("--taxa", taxa)->required();
  sim->add_option("--len", len, "root sequence length")->required();
  sim->add_option("--sub", sub, "per-site substitution rate")->required();
  sim->add_option("--del", del, "deletion rate (relative)")->required();
  sim->add_option("--ins", ins, "insertion rate (relative)")->required();
  sim->add_option("--seed", seed)->required();
  sim->add_option("-o,--output", output, "FASTA output path")->required();
  sim->add_option("--tree", tree_path, "Newick output path");

  auto* rot = app.add_subcommand("rotate", "randomly rotate each sequence");
  rot->add_option("fasta", fasta, "input MultiFASTA")->required();
  rot->add_option("--seed", seed)->required();
  rot->add_option("-o,--output", output, "FASTA output path")->required();

  auto* nj = app.add_subcommand("nj", "neighbor-joining tree from a matrix");
  nj->add_option("phylip", fasta, "input PHYLIP matrix")->required();
  nj->add_option("-o,--output", output, "Newick output path")->required();

  auto* ev = app.add_subcommand("eval", "compare trees by RF distance");
  ev->add_option("--true", true_path, "reference Newick")->required();
  ev->add_option("--inferred", inferred_path, "inferred Newick")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (dist->parsed())
      return cmd_dist(fasta, output, circular, max_len, workers,
                      alphabet_choice, lenient);
    if (mawc->parsed()) return cmd_maw(fasta, output, circular, alphabet_choice);
    if (sim->parsed())
      return cmd_simulate(taxa, len, sub, del, ins, seed, output, tree_path);
    if (rot->parsed()) return cmd_rotate(fasta, seed, output);
    if (nj->parsed()) return cmd_nj(fasta, output);
    if (ev->parsed()) return cmd_eval(true_path, inferred_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
