#include "app/report.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace sqzero::app {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json to_json(const Matrix& m) { return format_matrix(m); }

Json to_json(const IndexSet& s) { return s.indices(); }

Json to_json(const IndexPartition& p) {
  return Json{{"first", to_json(p.first())}, {"middle", to_json(p.middle())}, {"last", to_json(p.last())}};
}

Json to_json(const CoverResult& c) {
  Json rects = Json::array();
  for (const Rectangle& r : c.cover) rects.push_back(Json{{"rows", to_json(r.rows)}, {"cols", to_json(r.cols)}});
  return Json{{"size", c.size},
              {"optimal", c.optimal},
              {"maximal_rectangles", c.maximal_rectangles},
              {"nodes", c.nodes},
              {"rectangles", rects}};
}

Json to_json(const NNRankBounds& b) {
  Json j{{"lower", b.lower},
         {"upper", b.upper},
         {"exact", b.exact()},
         {"linear_rank", b.linear_rank},
         {"lower_certificate", to_string(b.lower_certificate)},
         {"upper_certificate", to_string(b.upper_certificate)},
         {"factorization", Json{{"inner", b.factorization.inner()},
                                {"left", to_json(b.factorization.left)},
                                {"right", to_json(b.factorization.right)}}}};
  if (b.cover) j["rectangle_cover"] = to_json(*b.cover);
  return j;
}

Json to_json(const SquareZeroWitness& w) {
  return Json{{"M", to_json(w.m)}, {"N", to_json(w.n)}, {"U", to_json(w.u)}};
}

Json to_json(const WitnessCheck& c) {
  return Json{{"shapes_agree", c.shapes_agree},
              {"factors_nonnegative", c.factors_nonnegative},
              {"MN == T", c.product_equals_t},
              {"M^2 == 0", c.m_square_zero},
              {"N^2 == 0", c.n_square_zero},
              {"NM == 0", c.reverse_product_zero},
              {"U == M + N", c.u_is_sum},
              {"all_pass", c.ok()}};
}

Json to_json(const Verdict& v) {
  Json j{{"answer", to_string(v.answer)}, {"reason", v.reason}};
  if (v.form) {
    j["partition"] = to_json(v.form->partition);
    j["block"] = to_json(v.form->block);
  }
  if (v.bounds) j["block_nonneg_rank"] = to_json(*v.bounds);
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const NecessaryCheck& c) {
  Json j{{"holds", c.holds}, {"reason", c.reason}, {"block_rank", c.block_rank}, {"middle_dim", c.middle_dim}};
  if (c.form) j["partition"] = to_json(c.form->partition);
  return j;
}

Json to_json(const CommutatorReport& r) {
  Json j{{"commutator", to_json(r.commutator)}, {"nonnegative", r.nonnegative}};
  if (!r.nonnegative) return j;
  j["annihilation"] = Json{{"MT == 0", r.m_annihilates_left},
                           {"TM == 0", r.m_annihilates_right},
                           {"NT == 0", r.n_annihilates_left},
                           {"TN == 0", r.n_annihilates_right}};
  j["sum_cube_zero"] = r.sum_cube_zero;
  if (r.partition) j["partition"] = to_json(*r.partition);
  j["block_pattern"] = r.block_pattern;
  j["block_factorizes"] = r.block_factorizes;
  j["block"] = to_json(r.block);
  j["block_rank"] = r.block_rank;
  j["middle_dim"] = r.middle_dim;
  j["necessary_condition"] = r.necessary_condition;
  return j;
}

void finalize(Json& report, std::chrono::steady_clock::time_point start) {
  report.erase("report_digest");
  report.erase("timing");
  report["report_digest"] = sha256_hex(report.dump());
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report["timing"] = Json{{"seconds", elapsed.count()}};
}

}  // namespace sqzero::app
