#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minkq/catalog.hpp"
#include "minkq/report_io.hpp"
#include "minkq/rng.hpp"
#include "minkq/structure.hpp"
#include "minkq/verification.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 64;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MINKQ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("MINKQ_SEED", "not an unsigned integer");
    }
  }
  return minkq::kDefaultSeed;
}

std::shared_ptr<const minkq::LieAlg> parse_algebra(const std::string& spec) {
  int p = 0, q = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "so(%d,%d%c", &p, &q, &tail) != 3 || tail != ')')
    throw CLI::ValidationError("--g", "expected so(P,Q), got '" + spec + "'");
  if ((p != 1 && p != 2) || q <= p)
    throw CLI::ValidationError("--g", "supported families are so(1,n) and so(2,n) with q > p");
  return minkq::so_data(p, q)->g;
}

int status_exit(minkq::CheckStatus s) {
  switch (s) {
    case minkq::CheckStatus::pass: return kExitPass;
    case minkq::CheckStatus::fail: return kExitFail;
    case minkq::CheckStatus::undetermined: return kExitUndetermined;
  }
  return kExitFail;
}

int emit(const std::vector<minkq::CheckReport>& reports, const std::string& json_path,
         std::uint64_t seed) {
  std::cout << minkq::render_text(reports);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kExitUsage;
    }
    out << minkq::render_json(reports, seed);
  }
  return status_exit(minkq::aggregate_status(reports));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for invariant Minkowski forms on so(p,q) quotients"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;

  auto* verify = app.add_subcommand("verify", "run check suites");
  verify->require_subcommand(1);

  int max_n = 8;
  std::string json_path;
  auto* all = verify->add_subcommand("all", "every suite up to --max-n");
  all->add_option("--max-n", max_n, "largest n (>= 3)")->required();
  all->add_option("--json", json_path, "write the machine-readable report here");
  auto* all_seed = all->add_option("--seed", seed, "seed for the randomized suites");

  int lemma_k = 0;
  std::string lemma_json;
  auto* lemma = verify->add_subcommand("lemma", "standard-representation weight/V-W suite");
  lemma->add_option("--k", lemma_k, "so(1,k), k >= 2")->required();
  lemma->add_option("--json", lemma_json, "write the machine-readable report here");
  auto* lemma_seed = lemma->add_option("--seed", seed, "seed for the randomized elements");

  std::string qg, qh, quotient_json;
  auto* quotient = verify->add_subcommand("quotient", "invariant Minkowski form on g/h");
  quotient->set_help_flag("--help", "print help");  // frees -h for the subalgebra option
  quotient->add_option("--g", qg, "ambient algebra, e.g. so(2,5)")->required();
  quotient->add_option("--h,-h", qh, "catalog subalgebra name, e.g. so(1,5)")->required();
  quotient->add_option("--json", quotient_json, "write the machine-readable report here");

  std::string roots_g;
  auto* roots_cmd = app.add_subcommand("roots", "restricted root data of so(p,q)");
  roots_cmd->add_option("--g", roots_g, "algebra, e.g. so(2,5)")->required();

  std::string sig_path;
  auto* sig_cmd = app.add_subcommand("signature", "signature of a symmetric matrix file");
  sig_cmd->add_option("--matrix", sig_path, "matrix text file")->required();

  std::string cat_g, cat_export;
  auto* cat_cmd = app.add_subcommand("catalog", "distinguished subalgebras of so(p,q)");
  cat_cmd->add_option("--g", cat_g, "algebra, e.g. so(2,5)")->required();
  cat_cmd->add_option("--export", cat_export, "directory for one basis file per entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!all_seed->count() && !lemma_seed->count()) seed = default_seed();

    if (all->parsed()) {
      if (max_n < 3) {
        std::cerr << "error: --max-n must be at least 3\n";
        return kExitUsage;
      }
      auto reports = minkq::run_all({max_n, seed});
      return emit(reports, json_path, seed);
    }
    if (lemma->parsed()) {
      if (lemma_k < 2) {
        std::cerr << "error: --k must be at least 2\n";
        return kExitUsage;
      }
      std::vector<minkq::CheckReport> reports{minkq::check_std_rep_lemma(lemma_k, seed)};
      return emit(reports, lemma_json, seed);
    }
    if (quotient->parsed()) {
      auto g = parse_algebra(qg);
      minkq::Subalg h = minkq::resolve_subalgebra(g, qh);
      std::vector<minkq::CheckReport> reports{minkq::check_quotient(g, h)};
      return emit(reports, quotient_json, seed);
    }
    if (roots_cmd->parsed()) {
      auto g = parse_algebra(roots_g);
      auto data = minkq::so_data(g->p(), g->q());
      std::cout << g->name() << " restricted roots on the standard Cartan:\n";
      for (const auto& r : data->roots.roots()) {
        std::cout << "  (";
        for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i];
        std::cout << ")  multiplicity " << data->roots.multiplicity(r) << "\n";
      }
      std::cout << "  dim g_0 = " << data->roots.zero_space().cols() << " (a: "
                << data->iw.a_basis.size() << ", m: " << data->iw.m_basis.size() << ")\n";
      return kExitPass;
    }
    if (sig_cmd->parsed()) {
      std::ifstream in(sig_path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open " << sig_path << "\n";
        return kExitUsage;
      }
      minkq::Mat m = minkq::mat_from_stream(in);
      std::cout << minkq::signature(m).to_string() << "\n";
      return kExitPass;
    }
    if (cat_cmd->parsed()) {
      auto g = parse_algebra(cat_g);
      auto entries = minkq::list_catalog(*g);
      for (const auto& e : entries) {
        minkq::Subalg h = minkq::standard_subalgebra(g, e.name);
        std::cout << e.name << "  dim " << h.dim() << "  (" << e.family << ")\n";
        if (h.dim() != e.expected_dim) {
          std::cerr << "error: dimension mismatch for " << e.name << "\n";
          return kExitFail;
        }
        if (!cat_export.empty()) {
          minkq::Mat packed(g->dim(), h.dim());
          for (int j = 0; j < h.dim(); ++j) packed.set_col(j, h.basis_coords.col(j));
          std::string fname = cat_export + "/" + e.name + ".mat";
          for (auto& c : fname)
            if (c == '(' || c == ')' || c == ',') c = '_';
          std::ofstream out(fname, std::ios::binary);
          if (!out) {
            std::cerr << "error: cannot write " << fname << "\n";
            return kExitUsage;
          }
          out << minkq::to_text(packed);
        }
      }
      return kExitPass;
    }
  } catch (const minkq::MatParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
