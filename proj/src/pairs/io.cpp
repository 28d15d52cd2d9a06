#include "qpf/pairs/io.hpp"

#include <cctype>
#include <fstream>

#include "qpf/scalar.hpp"

namespace qpf {

FieldSpec parse_field_spec(std::string_view text) {
  std::string s(text);
  if (s == "generic") return FieldSpec::generic();
  const std::string rou = "root-of-unity(";
  if (s.rfind(rou, 0) == 0 && s.back() == ')') {
    const std::string num = s.substr(rou.size(), s.size() - rou.size() - 1);
    try {
      std::size_t used = 0;
      int l = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
      return FieldSpec::root_of_unity(l);
    } catch (const std::logic_error&) {
      throw ParseError("bad root of unity order", rou.size(), num);
    }
  }
  if (s.rfind("q=", 0) == 0) s = s.substr(2);
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("bad field specification", 0, std::string(text));
  v.canonicalize();
  return FieldSpec::numeric(v);
}

template <class F>
nlohmann::json matrix_to_json(const SpMat<F>& m) {
  const Mat<F> d = to_dense(m);
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < d.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < d.cols(); ++j) row.push_back(d(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
SpMat<F> matrix_from_json(const nlohmann::json& j, const FieldSpec& field) {
  if (!j.is_array()) throw InvalidPair("matrix must be an array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(j.front().size()) : 0;
  std::vector<SparseVec<F>> c(static_cast<std::size_t>(cols));
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw InvalidPair("matrix rows have unequal length");
    for (Index k = 0; k < cols; ++k) {
      const auto& x = row[static_cast<std::size_t>(k)];
      F v = x.is_string() ? F::parse(x.get<std::string>(), field) : F::parse(x.dump(), field);
      if (!v.is_zero()) c[static_cast<std::size_t>(k)].e.emplace_back(i, std::move(v));
    }
  }
  return from_columns(rows, c);
}

template <class F>
nlohmann::json pair_to_json(const HeckePair<F>& p) {
  return nlohmann::json{{"provenance", p.provenance().to_string()},
                        {"field", p.field().to_string()},
                        {"dim", p.dim()},
                        {"degree_e", p.degree_e()},
                        {"R", matrix_to_json(p.R())}};
}

template <class F>
HeckePair<F> pair_from_json(const nlohmann::json& j, const FieldSpec& field) {
  try {
    if (j.contains("field") && !(parse_field_spec(j.at("field").get<std::string>()) == field))
      throw FieldMismatch("pair file is over " + j.at("field").get<std::string>() + ", expected " + field.to_string());
    const Index dim = j.at("dim").get<Index>();
    const int e = j.value("degree_e", 1);
    std::string label = j.value("provenance", std::string("explicit"));
    return explicit_pair<F>(field, dim, e, matrix_from_json<F>(j.at("R"), field), std::move(label));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidPair(std::string("malformed pair file: ") + ex.what());
  }
}

namespace {

template <class F>
class DescriptorParser {
 public:
  DescriptorParser(std::string_view s, const FieldSpec& field) : s_(s), field_(field) {}

  HeckePair<F> parse() {
    HeckePair<F> p = pair();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::size_t end = pos_;
    while (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])) && s_[end] != ',' && s_[end] != ')')
      ++end;
    std::string tok(s_.substr(pos_, end - pos_));
    if (tok.empty() && pos_ < s_.size()) tok = std::string(1, s_[pos_]);
    throw ParseError(what, pos_, tok);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  int integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a positive integer");
    const std::string digits(s_.substr(b, pos_ - b));
    if (digits.size() > 6) {
      pos_ = b;
      fail("integer too large");
    }
    return std::stoi(digits);
  }

  HeckePair<F> pair() {
    skip();
    const std::size_t start = pos_;
    if (accept('@')) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')' && !std::isspace(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      const std::string path(s_.substr(b, pos_ - b));
      std::ifstream in(path);
      if (!in) {
        pos_ = b;
        fail("cannot read pair file");
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception&) {
        pos_ = b;
        fail("pair file is not valid JSON");
      }
      return pair_from_json<F>(j, field_);
    }
    const std::string name = word();
    if (name == "unit") return unit_pair<F>(field_);
    if (name == "std") {
      expect('(');
      const std::size_t at = (skip(), pos_);
      int n = integer();
      if (n < 1) {
        pos_ = at;
        fail("dimension must be positive");
      }
      expect(')');
      return standard_pair<F>(n, field_);
    }
    if (name == "cable") {
      expect('(');
      HeckePair<F> base = pair();
      expect(',');
      const std::size_t at = (skip(), pos_);
      int e = integer();
      if (e < 1) {
        pos_ = at;
        fail("cabling degree must be positive");
      }
      expect(')');
      return cable(base, e);
    }
    if (name == "dual") {
      expect('(');
      HeckePair<F> base = pair();
      expect(')');
      return dual_pair(base);
    }
    if (name == "dsum") {
      expect('(');
      std::vector<HeckePair<F>> parts{pair()};
      while (accept(',')) parts.push_back(pair());
      expect(')');
      return direct_sum(parts);
    }
    pos_ = start;
    fail(name.empty() ? "expected a pair descriptor" : "unknown pair constructor");
  }

  std::string_view s_;
  const FieldSpec& field_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
HeckePair<F> parse_pair(std::string_view text, const FieldSpec& field) {
  return DescriptorParser<F>(text, field).parse();
}

#define QPF_INSTANTIATE(F)                                                            \
  template nlohmann::json matrix_to_json<F>(const SpMat<F>&);                        \
  template SpMat<F> matrix_from_json<F>(const nlohmann::json&, const FieldSpec&);    \
  template nlohmann::json pair_to_json<F>(const HeckePair<F>&);                      \
  template HeckePair<F> pair_from_json<F>(const nlohmann::json&, const FieldSpec&);  \
  template HeckePair<F> parse_pair<F>(std::string_view, const FieldSpec&);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
