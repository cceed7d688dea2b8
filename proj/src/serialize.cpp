#include "relfrob/serialize.hpp"

#include <openssl/evp.h>

#include <fstream>

namespace relfrob {

std::string rational_str(const Rational& r) { return r.str(); }

Rational rational_from_str(const std::string& s) { return Rational::parse(s); }

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const Rational& r : c.coefficients()) coeffs.push_back(r.str());
  return Json{{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  unsigned n = j.at("conductor").get<unsigned>();
  const Json& coeffs = j.at("coeffs");
  if (euler_phi(n) != coeffs.size())
    throw ParseError("cyclotomic coefficient count does not match conductor");
  Cyclotomic acc(Rational(0), n);
  unsigned i = 0;
  for (const auto& c : coeffs) {
    Rational r = Rational::parse(c.get<std::string>());
    if (!r.is_zero())
      acc += Cyclotomic::root_of_unity(n, static_cast<long>(i)) * r;
    ++i;
  }
  return acc;
}

std::string group_content_hash(const FiniteGroup& g) {
  std::vector<unsigned char> bytes;
  bytes.reserve(4 + g.table().size() * 4);
  auto push32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
      bytes.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
  };
  push32(g.order());
  for (Elt x : g.table()) push32(x);

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                  nullptr))
    throw Error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

Json chartable_to_json(const CharacterTable& t) {
  Json rows = Json::array();
  for (unsigned i = 0; i < t.num_irreps(); ++i) {
    Json row = Json::array();
    for (unsigned c = 0; c < t.num_classes(); ++c)
      row.push_back(cyclotomic_to_json(t.value(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"schema", 1},
              {"hash", group_content_hash(t.group())},
              {"order", t.group().order()},
              {"num_classes", t.num_classes()},
              {"dims", t.dims()},
              {"values", std::move(rows)}};
}

CharacterTable chartable_from_json(const GroupPtr& group, const Json& j) {
  if (j.at("hash").get<std::string>() != group_content_hash(*group))
    throw ParseError("cached table belongs to a different group");
  std::vector<unsigned> dims = j.at("dims").get<std::vector<unsigned>>();
  unsigned r = group->conjugacy().num_classes;
  const Json& rows = j.at("values");
  if (rows.size() != r) throw ParseError("cached table has wrong row count");
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(r) * r);
  for (const auto& row : rows) {
    if (row.size() != r) throw ParseError("cached table has wrong row width");
    for (const auto& cell : row) values.push_back(cyclotomic_from_json(cell));
  }
  return CharacterTable::from_parts(group, std::move(dims), std::move(values));
}

CharacterTable chartable_cached(const GroupPtr& group,
                                const std::filesystem::path& cache_dir,
                                const Config& cfg) {
  std::string hash = group_content_hash(*group);
  std::filesystem::path file = cache_dir / (hash + ".json");
  if (std::filesystem::exists(file)) {
    try {
      std::ifstream in(file);
      Json j = Json::parse(in);
      if (j.at("schema").get<int>() == 1) return chartable_from_json(group, j);
    } catch (...) {
      // unreadable or unknown cache entries are recomputed below
    }
  }
  CharacterTable t = CharacterTable::compute(group, cfg);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << chartable_to_json(t).dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return t;
}

}  // namespace relfrob
