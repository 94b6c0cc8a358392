#pragma once

#include "listagree/cochain.hpp"
#include "listagree/complex.hpp"
#include "listagree/direct_sum.hpp"
#include "listagree/list_assignment.hpp"
#include "listagree/representation.hpp"

#include <string>

namespace listagree {

// {"d": int, "maximal_faces": [[int,...],...]}
std::string complex_to_json(const SimplicialComplex& X);
SimplicialComplex complex_from_json(const std::string& text);

// {"dim": int, "coefficients": "S_l"|"F2", "l": int, "values": [[face, element],...]};
// S_l elements are one-line arrays, F2 elements are 0 or 1.
std::string cochain_to_json(const Cochain& f);
Cochain cochain_from_json(const std::string& text, ComplexPtr base);

// {"k": int, "l": int, "faces": [{"face": [...], "lists": [[bit per vertex], ...]}, ...]}
std::string l_assignment_to_json(const LAssignment& F);
LAssignment l_assignment_from_json(const std::string& text, ComplexPtr base);

// {"k_minus_1_faces": [[...],...], "values": [bit,...]}
std::string face_function_to_json(const FaceFunction& F);
FaceFunction face_function_from_json(const std::string& text, ComplexPtr base);

// {"k": int, "vertices": [[k-face], ...], "complex": <complex JSON>}; vertex i of the
// complex is the i-th listed k-face.
std::string representation_to_json(const RepresentationComplex& R);

// Throw IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace listagree
