#pragma once

#include "gkm/graphs.hpp"

namespace gkm {

/// The five 2-face patterns of non-negatively curved odd GKM graphs.
enum class FaceShape { Pinwheel1, Chain2A, Lune2B, Triangle3, Quadrangle4, Other };
std::string to_string(FaceShape s);

struct EvenFace {
    std::vector<int> vertices;  // sorted
    std::vector<int> edges;     // sorted
    bool operator==(const EvenFace&) const = default;
};

struct OddFace {
    std::vector<int> circles;  // sorted
    std::vector<int> squares;  // sorted
    bool operator==(const OddFace&) const = default;
};

/// The unique 2-face through `base` spanned by two incident darts/squares,
/// computed by span membership of weights. Throws if the two weights are
/// linearly dependent.
EvenFace extract_two_face(const EvenGkmGraph& g, int base, const Dart& a, const Dart& b);
OddFace extract_two_face(const OddGkmGraph& g, int base_circle, int square_a, int square_b);

/// Cross-check variants that trace the face by connection transport instead
/// of span membership. Agree with the above on GKM_3 graphs.
EvenFace extract_two_face_transport(const EvenGkmGraph& g, int base, const Dart& a, const Dart& b);
OddFace extract_two_face_transport(const OddGkmGraph& g, const OddConnectionTable& table,
                                   int base_circle, int square_a, int square_b);

/// Pattern-matches circle count and in-face square valences. Faces must be
/// 2-valent at circles.
FaceShape classify_face_shape(const OddGkmGraph& g, const OddFace& face);

/// All distinct 2-faces over every base and independent weight pair.
std::vector<OddFace> enumerate_two_faces(const OddGkmGraph& g);
std::vector<EvenFace> enumerate_two_faces(const EvenGkmGraph& g);

enum class CurvatureMode { NonNegative, Positive };

struct GateReport {
    bool pass = true;
    std::vector<std::string> offending_squares;
    std::vector<std::string> offending_faces;
};

/// NonNegative: every square valence in {1,2} and every 2-face classifies to
/// a non-Other shape. Positive: every square valence = 1.
GateReport curvature_gate(const OddGkmGraph& g, CurvatureMode mode);

/// All 2-faces with exactly two vertices. Nonempty output certifies that no
/// consistent sign structure exists on a GKM_3 graph.
std::vector<EvenFace> detect_biangles(const EvenGkmGraph& g);

}  // namespace gkm
