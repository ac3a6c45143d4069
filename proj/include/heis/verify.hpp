#pragma once

#include "heis/functor.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace heis {

struct CheckRecord {
    std::string suite;
    nlohmann::json params;
    std::string relation_id;
    bool pass = false;
    std::string lhs_hash, rhs_hash;
    double elapsed_ms = 0;
    std::string detail;
};

nlohmann::json to_json(const CheckRecord& r);

// 64-bit FNV-1a over a canonical text form of the matrix, hex encoded
std::string matrix_hash(const Matrix& m);

// Offsets added to the scalars used on right-hand sides; nonzero values are
// negative controls.
struct Perturbation {
    Q bubble_d = 0;
    Q c1 = 0;
};

// One record per relation: braid, s^2, both dot slides, both double
// crossings, bubbles with j <= d dots, left curl, the right curl formula,
// the four zigzags, and the rotated crossings.
std::vector<CheckRecord> verify_local_relations(FunctorAction& F, int n, const Perturbation& p = {});

// bubble with d-1+t dots minus (t-1) p_{t-2}(x_1..x_n) has PBW degree <= t-3
CheckRecord power_sum_leading(FunctorAction& F, int t, int n);

struct FullnessReport {
    int n = 0, k = 0;
    size_t commutant_dim = 0, image_dim = 0, generated_dim = 0;
    bool image_equal = false, generated_equal = false;
    bool pass() const { return image_equal && generated_equal; }
};

// End((n+k)_n) three ways: brute-force commutant of H_n in H_{n+k}, the
// algebra generated by F_n of crossings, dots and bubbles, and the algebra
// generated by H_k together with Z(H_n).
FullnessReport centralizer_fullness_check(FunctorAction& F, int n, int k);

// Random slice word of len slices starting from dom, never wider than max_width.
std::string random_word(std::mt19937_64& rng, const SignSeq& dom, int len, int max_width);

struct SoundnessOptions {
    int words_per_family = 200;
    int max_rank = 2;
    std::uint64_t seed = 1;
    int randomized_runs = 3;
    int max_width = 4;
    int max_len = 8;
    long fuel = 1000000;
};

struct WordFamily {
    std::string name;
    std::vector<SignSeq> domains;
};

std::vector<WordFamily> default_families();

// Per word: the default and randomized rule orders agree, and
// F_n(reduce(w)) = F_n(w) for every n up to max_rank that fits the cap.
std::vector<CheckRecord> soundness_suite(FunctorAction& F, Reducer& R, const SoundnessOptions& opt,
                                         const std::vector<WordFamily>& families = default_families());

} // namespace heis
