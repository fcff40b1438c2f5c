#pragma once

#include "pedvis/ingest.hpp"
#include "pedvis/pedigree.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace pedvis::test {

inline constexpr int kDepression = 0;  // index of "Depression" in default_disease_names()

Person person(std::string id, std::string family, Sex sex, std::string father = {}, std::string mother = {},
              int age = 50, VitalStatus status = VitalStatus::Alive,
              std::initializer_list<DiagnosisRecord> diagnoses = {});

/// F1 (male founder), M1 (female founder), C1 their child, family "FAM".
std::vector<Person> trio();

/// Family "27251": a suicide victim with depression whose two children were
/// both diagnosed with depression and also died by suicide.
std::vector<Person> family_27251_like();

/// Family "68939": same-generation cousins, both suicide victims with
/// depression, no victim parent.
std::vector<Person> family_68939_like();

/// Family "149": nine generations; one person in the ninth (generation index
/// 8) has five diagnoses and died by suicide while every other member of the
/// ninth, eighth and seventh generations is alive.
std::vector<Person> family_149_like();

/// The three families above plus six generated ones: nine families total.
Dataset nine_family_dataset();

/// Deterministic RNG helpers; mt19937_64 output is fixed by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

/// Random two-parent DAG (not necessarily generation-consistent) with at
/// most `max_persons` persons.
std::vector<Person> random_pedigree(std::uint64_t seed, int max_persons, const std::string& family = "R");

/// Tree-shaped family: founder couple, every parent has one married-in
/// spouse. Depth <= max_depth generations below the founders, at most
/// `max_branching` children per couple, at most `max_persons` persons.
std::vector<Person> random_family_tree(std::uint64_t seed, int max_depth, int max_branching, int max_persons,
                                       const std::string& family = "T");

/// Random statuses, ages and diagnoses over `disease_count` diseases,
/// respecting diagnosis age <= age.
void randomize_clinical(std::vector<Person>& persons, Rng& rng, int disease_count);

/// A multi-family dataset of random trees with random clinical data.
Dataset random_dataset(std::uint64_t seed);

}  // namespace pedvis::test
