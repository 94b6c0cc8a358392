#include "listagree/serialization.hpp"

#include "listagree/error.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace listagree {

using Json = nlohmann::ordered_json;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

// Runs `body`, turning JSON type and key errors into ParseError.
template <class Body>
auto guarded(Body body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json bits_of(LocalFunction value, std::size_t width) {
  Json out = Json::array();
  for (std::size_t j = 0; j < width; ++j) out.push_back((value >> j) & 1u);
  return out;
}

LocalFunction from_bits(const Json& bits, std::size_t width) {
  if (!bits.is_array() || bits.size() != width) throw Error(ErrorKind::ParseError, "list entry needs one bit per vertex");
  LocalFunction v = 0;
  for (std::size_t j = 0; j < width; ++j) {
    const int b = bits[j].get<int>();
    if (b != 0 && b != 1) throw Error(ErrorKind::ParseError, "bits must be 0 or 1");
    if (b) v |= 1u << j;
  }
  return v;
}

std::size_t face_index(const SimplicialComplex& X, const Json& face) {
  const Face f = make_face(face.get<std::vector<Vertex>>());
  const auto idx = X.index_of(f);
  if (!idx) throw Error(ErrorKind::FaceNotInComplex, "face in input is not in the complex");
  return *idx;
}

}  // namespace

std::string complex_to_json(const SimplicialComplex& X) {
  Json j;
  j["d"] = X.dim();
  j["maximal_faces"] = X.maximal_faces();
  return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
  const Json j = parse(text);
  return guarded([&] {
    const int d = j.at("d").get<int>();
    auto faces = j.at("maximal_faces").get<std::vector<Face>>();
    for (const auto& f : faces)
      if (static_cast<int>(f.size()) != d + 1) throw Error(ErrorKind::MixedDimensions, "maximal face size disagrees with d");
    return SimplicialComplex::build(std::move(faces));
  });
}

std::string cochain_to_json(const Cochain& f) {
  Json j;
  const bool f2 = f.group().kind() == FiniteGroup::Kind::F2;
  j["dim"] = f.dim();
  j["coefficients"] = f2 ? "F2" : "S_l";
  j["l"] = f.group().degree();
  Json values = Json::array();
  const auto& faces = f.base().faces(f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Json element = f2 ? Json(f.at(i)) : Json(f.group().permutation(f.at(i)));
    values.push_back(Json::array({faces[i], element}));
  }
  j["values"] = std::move(values);
  return j.dump();
}

Cochain cochain_from_json(const std::string& text, ComplexPtr base) {
  const Json j = parse(text);
  return guarded([&] {
    const int dim = j.at("dim").get<int>();
    const std::string coeff = j.at("coefficients").get<std::string>();
    const int l = j.at("l").get<int>();
    GroupPtr G;
    if (coeff == "F2") G = std::make_shared<const FiniteGroup>(FiniteGroup::f2());
    else if (coeff == "S_l") G = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(l));
    else throw Error(ErrorKind::ParseError, "coefficients must be S_l or F2");
    if (dim < -1 || dim > base->dim()) throw Error(ErrorKind::DimensionOutOfRange, "cochain dimension");
    Cochain f(base, G, dim);
    std::vector<bool> seen(f.size(), false);
    for (const auto& entry : j.at("values")) {
      const std::size_t idx = face_index(*base, entry.at(0));
      const Json& el = entry.at(1);
      Element g = 0;
      if (coeff == "F2") {
        const int b = el.get<int>();
        if (b != 0 && b != 1) throw Error(ErrorKind::ParseError, "F2 values must be 0 or 1");
        g = static_cast<Element>(b);
      } else {
        g = G->element_of(el.get<std::vector<int>>());
      }
      f.set(idx, g);
      seen[idx] = true;
    }
    for (bool s : seen)
      if (!s) throw Error(ErrorKind::ParseError, "cochain must list every face");
    return f;
  });
}

std::string l_assignment_to_json(const LAssignment& F) {
  Json j;
  j["k"] = F.k();
  j["l"] = F.l();
  Json faces = Json::array();
  for (std::size_t s = 0; s < F.face_count(); ++s) {
    Json lists = Json::array();
    for (int i = 0; i < F.l(); ++i) lists.push_back(bits_of(F.entry(s, i), F.face(s).size()));
    Json entry;
    entry["face"] = F.face(s);
    entry["lists"] = std::move(lists);
    faces.push_back(std::move(entry));
  }
  j["faces"] = std::move(faces);
  return j.dump();
}

LAssignment l_assignment_from_json(const std::string& text, ComplexPtr base) {
  const Json j = parse(text);
  return guarded([&] {
    const int k = j.at("k").get<int>();
    const int l = j.at("l").get<int>();
    LAssignment F(base, k, l);
    std::vector<bool> seen(F.face_count(), false);
    for (const auto& entry : j.at("faces")) {
      const std::size_t s = face_index(*base, entry.at("face"));
      if (static_cast<int>(F.face(s).size()) != k + 1) throw Error(ErrorKind::MixedDimensions, "face size disagrees with k");
      const auto& lists = entry.at("lists");
      if (!lists.is_array() || static_cast<int>(lists.size()) != l) throw Error(ErrorKind::ParseError, "each face needs l lists");
      for (int i = 0; i < l; ++i) F.set_entry(s, i, from_bits(lists[static_cast<std::size_t>(i)], F.face(s).size()));
      seen[s] = true;
    }
    for (bool s : seen)
      if (!s) throw Error(ErrorKind::ParseError, "l-assignment must list every k-face");
    return F;
  });
}

std::string face_function_to_json(const FaceFunction& F) {
  Json j;
  j["k_minus_1_faces"] = F.faces();
  j["values"] = F.values;
  return j.dump();
}

FaceFunction face_function_from_json(const std::string& text, ComplexPtr base) {
  const Json j = parse(text);
  return guarded([&] {
    const auto& faces = j.at("k_minus_1_faces");
    const auto& values = j.at("values");
    if (!faces.is_array() || faces.empty() || faces.size() != values.size())
      throw Error(ErrorKind::ParseError, "faces and values must align");
    const int k = static_cast<int>(faces[0].size());
    FaceFunction F(base, k);
    std::vector<bool> seen(F.size(), false);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (static_cast<int>(faces[i].size()) != k) throw Error(ErrorKind::MixedDimensions, "faces of different sizes");
      const std::size_t idx = face_index(*base, faces[i]);
      const int b = values[i].get<int>();
      if (b != 0 && b != 1) throw Error(ErrorKind::ParseError, "values must be bits");
      F.values[idx] = static_cast<std::uint8_t>(b);
      seen[idx] = true;
    }
    for (bool s : seen)
      if (!s) throw Error(ErrorKind::ParseError, "face function must list every (k-1)-face");
    return F;
  });
}

std::string representation_to_json(const RepresentationComplex& R) {
  Json j;
  j["k"] = R.k();
  j["vertices"] = R.base().faces(R.k());
  j["complex"] = Json::parse(complex_to_json(R.complex()));
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}  // namespace listagree
