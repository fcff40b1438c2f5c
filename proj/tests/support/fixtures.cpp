#include "support/fixtures.hpp"

#include "pedvis/glyph.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace pedvis::test {

Person person(std::string id, std::string family, Sex sex, std::string father, std::string mother, int age,
              VitalStatus status, std::initializer_list<DiagnosisRecord> diagnoses) {
    Person p;
    p.person_id = std::move(id);
    p.family_id = std::move(family);
    p.sex = sex;
    if (!father.empty()) p.father_id = std::move(father);
    if (!mother.empty()) p.mother_id = std::move(mother);
    p.age_years = age;
    p.vital_status = status;
    p.diagnoses = diagnoses;
    std::sort(p.diagnoses.begin(), p.diagnoses.end(),
              [](const DiagnosisRecord& a, const DiagnosisRecord& b) { return a.disease_index < b.disease_index; });
    return p;
}

std::vector<Person> trio() {
    return {person("F1", "FAM", Sex::Male), person("M1", "FAM", Sex::Female),
            person("C1", "FAM", Sex::Male, "F1", "M1", 20)};
}

namespace {
constexpr auto Alive = VitalStatus::Alive;
constexpr auto Deceased = VitalStatus::Deceased;
constexpr auto Suicide = VitalStatus::Suicide;
constexpr auto M = Sex::Male;
constexpr auto F = Sex::Female;
}  // namespace

std::vector<Person> family_27251_like() {
    const std::string fam = "27251";
    return {
        person("27251-A1", fam, M, "", "", 88, Deceased),
        person("27251-A2", fam, F, "", "", 85, Deceased),
        person("27251-P1", fam, M, "27251-A1", "27251-A2", 45, Suicide, {{kDepression, 30}}),
        person("27251-S1", fam, F, "", "", 70, Alive),
        person("27251-P2", fam, F, "27251-A1", "27251-A2", 72, Alive),
        person("27251-S2", fam, M, "", "", 75, Deceased),
        person("27251-Q1", fam, M, "27251-S2", "27251-P2", 40, Alive),
        person("27251-C1", fam, M, "27251-P1", "27251-S1", 28, Suicide, {{kDepression, 19}, {1, 20}}),
        person("27251-C2", fam, F, "27251-P1", "27251-S1", 31, Suicide, {{kDepression, 22}}),
    };
}

std::vector<Person> family_68939_like() {
    const std::string fam = "68939";
    return {
        person("68939-B1", fam, M, "", "", 90, Deceased),
        person("68939-B2", fam, F, "", "", 87, Deceased),
        person("68939-K1", fam, M, "68939-B1", "68939-B2", 70, Deceased),
        person("68939-W1", fam, F, "", "", 80, Alive),
        person("68939-K2", fam, F, "68939-B1", "68939-B2", 78, Alive),
        person("68939-H2", fam, M, "", "", 76, Deceased),
        person("68939-X1", fam, M, "68939-K1", "68939-W1", 35, Suicide, {{kDepression, 25}}),
        person("68939-X2", fam, F, "68939-K1", "68939-W1", 50, Alive, {{1, 33}}),
        person("68939-Y1", fam, F, "68939-H2", "68939-K2", 29, Suicide, {{kDepression, 21}, {2, 24}}),
        person("68939-Y2", fam, M, "68939-H2", "68939-K2", 45, Alive),
    };
}

std::vector<Person> family_149_like() {
    const std::string fam = "149";
    std::vector<Person> out;
    auto id = [](const char* role, int g) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "149-%s%d", role, g);
        return std::string(buf);
    };
    // Main line L<g> married to S<g>; T<g> is L<g>'s childless sibling.
    for (int g = 0; g <= 7; ++g) {
        const bool recent = g >= 6;
        const int age = g == 6 ? 95 : g == 7 ? 70 : 80;
        const VitalStatus status = recent ? Alive : Deceased;
        const std::string father = g == 0 ? "" : id("L", g - 1);
        const std::string mother = g == 0 ? "" : id("S", g - 1);
        out.push_back(person(id("L", g), fam, M, father, mother, age, status));
        out.push_back(person(id("S", g), fam, F, "", "", age, status));
        if (g > 0) out.push_back(person(id("T", g), fam, F, father, mother, age - 2, status));
    }
    out.push_back(person("149-V8", fam, M, id("L", 7), id("S", 7), 38, Suicide,
                         {{kDepression, 22}, {1, 25}, {4, 30}, {6, 31}, {12, 36}}));
    out.push_back(person("149-Z8", fam, F, id("L", 7), id("S", 7), 41, Alive, {{1, 35}}));
    return out;
}

Dataset nine_family_dataset() {
    std::vector<Person> all;
    for (auto&& f : {family_27251_like(), family_68939_like(), family_149_like()}) all.insert(all.end(), f.begin(), f.end());
    const char* extra[] = {"1107", "2290", "3518", "44012", "5873", "7761"};
    std::uint64_t seed = 9001;
    for (const char* fam : extra) {
        auto members = random_family_tree(seed, 5, 3, 40, fam);
        Rng rng(seed * 7 + 1);
        randomize_clinical(members, rng, kExpectedDiseaseCount);
        all.insert(all.end(), members.begin(), members.end());
        ++seed;
    }
    return make_dataset(all, default_disease_names());
}

std::vector<Person> random_pedigree(std::uint64_t seed, int max_persons, const std::string& family) {
    Rng rng(seed);
    std::vector<Person> out;
    std::vector<std::size_t> males, females;
    auto next_id = [&] {
        char buf[16];
        std::snprintf(buf, sizeof buf, "_%04zu", out.size());
        return family + buf;
    };
    auto add = [&](Person p) {
        (p.sex == Sex::Male ? males : females).push_back(out.size());
        out.push_back(std::move(p));
    };
    const int founders = rng.between(2, 4);
    for (int i = 0; i < founders && static_cast<int>(out.size()) < max_persons; ++i)
        add(person(next_id(), family, i % 2 ? Sex::Female : Sex::Male));
    while (static_cast<int>(out.size()) < max_persons) {
        const Sex sex = rng.chance(0.5) ? Sex::Male : Sex::Female;
        if (males.empty() || females.empty() || rng.chance(0.15)) {
            add(person(next_id(), family, sex));
            continue;
        }
        // Bias towards recent persons so pedigrees grow deep, not just wide.
        auto pick = [&](const std::vector<std::size_t>& pool) {
            const int window = std::min<int>(static_cast<int>(pool.size()), 30);
            return pool[pool.size() - 1 - rng.below(window)];
        };
        const auto& father = out[pick(males)].person_id;
        const auto& mother = out[pick(females)].person_id;
        Person child = person(next_id(), family, sex, father, mother);
        if (rng.chance(0.1)) child.mother_id.reset();  // occasional single-parent record
        add(std::move(child));
    }
    return out;
}

std::vector<Person> random_family_tree(std::uint64_t seed, int max_depth, int max_branching, int max_persons,
                                       const std::string& family) {
    Rng rng(seed);
    std::vector<Person> out;
    auto next_id = [&] {
        char buf[16];
        std::snprintf(buf, sizeof buf, "_%04zu", out.size());
        return family + buf;
    };
    struct Couple {
        std::string father, mother;
        int depth;
    };
    out.push_back(person(next_id(), family, Sex::Male));
    out.push_back(person(next_id(), family, Sex::Female));
    std::vector<Couple> open{{out[0].person_id, out[1].person_id, 0}};
    while (!open.empty() && static_cast<int>(out.size()) < max_persons) {
        const std::size_t pick = static_cast<std::size_t>(rng.below(static_cast<int>(open.size())));
        Couple c = open[pick];
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
        int kids = rng.between(c.depth == 0 ? 1 : 0, max_branching);
        for (int k = 0; k < kids && static_cast<int>(out.size()) < max_persons; ++k) {
            const Sex sex = rng.chance(0.5) ? Sex::Male : Sex::Female;
            Person child = person(next_id(), family, sex, c.father, c.mother);
            const std::string child_id = child.person_id;
            out.push_back(std::move(child));
            if (c.depth + 1 < max_depth && static_cast<int>(out.size()) < max_persons && rng.chance(0.6)) {
                Person spouse = person(next_id(), family, sex == Sex::Male ? Sex::Female : Sex::Male);
                const std::string spouse_id = spouse.person_id;
                out.push_back(std::move(spouse));
                if (sex == Sex::Male)
                    open.push_back({child_id, spouse_id, c.depth + 1});
                else
                    open.push_back({spouse_id, child_id, c.depth + 1});
            }
        }
    }
    return out;
}

void randomize_clinical(std::vector<Person>& persons, Rng& rng, int disease_count) {
    for (auto& p : persons) {
        p.age_years = rng.between(0, 104);
        const int roll = rng.below(100);
        p.vital_status = roll < 60 ? VitalStatus::Alive : roll < 85 ? VitalStatus::Deceased : VitalStatus::Suicide;
        int n = 0;
        if (p.vital_status == VitalStatus::Suicide)
            n = rng.between(0, std::min(4, disease_count));
        else if (rng.chance(0.2))
            n = rng.between(1, std::min(2, disease_count));
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < n) picked.insert(rng.below(disease_count));
        p.diagnoses.clear();
        for (int d : picked) p.diagnoses.push_back({d, rng.between(0, p.age_years)});
    }
}

Dataset random_dataset(std::uint64_t seed) {
    Rng rng(seed);
    const int disease_count = rng.chance(0.8) ? kExpectedDiseaseCount : rng.between(1, 20);
    std::vector<std::string> names;
    for (int d = 0; d < disease_count; ++d) names.push_back("Disease" + std::to_string(d));
    std::vector<Person> all;
    const int families = rng.between(1, 4);
    for (int f = 0; f < families; ++f) {
        const std::string fam = "F" + std::to_string(seed) + "-" + std::to_string(f);
        auto members = random_family_tree(seed * 31 + f, rng.between(1, 5), rng.between(1, 4), 60, fam);
        randomize_clinical(members, rng, disease_count);
        for (auto& m : members)
            if (rng.chance(0.05)) m.sex = Sex::Unknown;
        all.insert(all.end(), members.begin(), members.end());
    }
    return make_dataset(all, names);
}

}  // namespace pedvis::test
