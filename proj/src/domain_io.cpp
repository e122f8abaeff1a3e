#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cardylab/hex_domain.hpp"

namespace cardylab {

std::string domain_to_json(const MarkedDomain& md) {
  nlohmann::json j;
  j["mesh"] = md.domain().mesh();
  auto faces = nlohmann::json::array();
  for (auto f : md.domain().faces()) faces.push_back({f.q, f.r});
  j["faces"] = std::move(faces);
  j["marks"] = md.marks();
  return j.dump();
}

MarkedDomain domain_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::IoError, std::string("bad domain json: ") + e.what());
  }
  if (!j.contains("mesh") || !j.contains("faces"))
    throw Error(ErrorKind::IoError, "domain json needs 'mesh' and 'faces'");
  std::vector<FaceCoord> faces;
  for (auto& f : j["faces"]) faces.push_back({f.at(0).get<std::int32_t>(), f.at(1).get<std::int32_t>()});
  auto dom = std::make_shared<const HexDomain>(build_domain(faces, j["mesh"].get<double>()));
  std::vector<MidId> marks;
  if (j.contains("marks"))
    for (auto& m : j["marks"]) marks.push_back(m.get<MidId>());
  return MarkedDomain(dom, marks);
}

MarkedDomain load_domain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return domain_from_json(ss.str());
}

void save_domain_file(const MarkedDomain& md, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << domain_to_json(md) << "\n";
}

}  // namespace cardylab
