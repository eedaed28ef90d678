#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "denum/pipeline.hpp"
#include "denum/rng.hpp"
#include "denum/trace.hpp"

using namespace denum;

namespace {

struct Replay {
    std::vector<RationalTerm> terms;
    MuVector mu{};
    bool have_mu = false;
    Integer count = 0;
    bool have_count = false;
};

// Rebuild the emitted terms and the final count from trace records alone.
Replay replay_from(const std::vector<TraceRecord>& records) {
    Replay r;
    for (const TraceRecord& rec : records) {
        switch (rec.stage) {
        case Stage::euclid_step:
        case Stage::base_case:
            if (rec.has("zero"))
                break;
            r.terms.push_back(RationalTerm{expvec_from_string(rec.get("m1")),
                                           expvec_from_string(rec.get("m2")),
                                           expvec_from_string(rec.get("omega")),
                                           expvec_from_string(rec.get("theta"))});
            break;
        case Stage::mu_select: {
            const ExpVec v = expvec_from_string(rec.get("mu"));
            r.mu = MuVector{v.e1.get_num(), v.e2.get_num(), v.e3.get_num()};
            r.have_mu = true;
            break;
        }
        case Stage::sum:
            r.count = Integer(rec.get("count"));
            r.have_count = true;
            break;
        default:
            break;
        }
    }
    return r;
}

std::vector<TraceRecord> trace_compute(const Integer& n, const Integer& a,
                                       const Integer& b, const Integer& c) {
    std::vector<TraceRecord> records;
    TraceSink sink = [&records](const TraceRecord& rec) { records.push_back(rec); };
    ComputeOptions opts;
    opts.trace = &sink;
    compute(n, a, b, c, opts);
    return records;
}

} // namespace

TEST_CASE("stage names round-trip") {
    for (int i = 0; i <= static_cast<int>(Stage::sum); ++i) {
        const Stage s = static_cast<Stage>(i);
        CHECK(stage_from_name(stage_name(s)) == s);
    }
    CHECK_THROWS_AS(stage_from_name("bogus"), invalid_input);
}

TEST_CASE("record formatting round-trips") {
    TraceRecord rec{Stage::euclid_step, {}};
    rec.add("side", "a");
    rec.add("m1", "19,-3,-1");
    rec.add("omega", "7,-3,0");
    const std::string line = format_record(rec);
    CHECK(line == "stage=euclid-step side=a m1=19,-3,-1 omega=7,-3,0");
    const TraceRecord back = parse_record(line);
    CHECK(back.stage == Stage::euclid_step);
    CHECK(back.get("side") == "a");
    CHECK(back.get("m1") == "19,-3,-1");
    CHECK(back.has("omega"));
    CHECK_FALSE(back.has("theta"));
    CHECK_THROWS_AS(back.get("theta"), internal_error);
    CHECK_THROWS_AS(parse_record("no stage here"), invalid_input);
}

TEST_CASE("records appear in pipeline order") {
    const std::vector<TraceRecord> records = trace_compute(25, 3, 7, 11);
    REQUIRE(records.size() >= 6);
    CHECK(records.front().stage == Stage::normalize);
    CHECK(records[1].stage == Stage::gcd_reduce);
    CHECK(records[2].stage == Stage::split);
    CHECK(records[3].stage == Stage::unit_transform);
    CHECK(records.back().stage == Stage::sum);
    int last = -1;
    for (const TraceRecord& rec : records) {
        if (rec.stage == Stage::unit_transform || rec.stage == Stage::euclid_step ||
            rec.stage == Stage::base_case || rec.stage == Stage::eval_term)
            continue; // repeated stages
        CHECK(static_cast<int>(rec.stage) > last);
        last = static_cast<int>(rec.stage);
    }
}

TEST_CASE("replaying a trace reproduces the count") {
    const std::vector<TraceRecord> records = trace_compute(25, 3, 7, 11);
    const Replay r = replay_from(records);
    REQUIRE(r.have_mu);
    REQUIRE(r.have_count);
    CHECK(r.terms.size() == 4);
    CHECK(r.count == 3);
    CHECK(eval_sum(r.terms, r.mu) == r.count);
}

TEST_CASE("replay works across random instances") {
    std::mt19937_64 rng(79);
    int done = 0;
    while (done < 40) {
        const Integer a = 1 + Integer(static_cast<unsigned long>(uniform_below(rng, 50)));
        const Integer b = 1 + Integer(static_cast<unsigned long>(uniform_below(rng, 500)));
        const Integer c = 1 + Integer(static_cast<unsigned long>(uniform_below(rng, 5000)));
        if (a == b || b == c || a == c)
            continue;
        const Integer n(static_cast<unsigned long>(uniform_below(rng, 100000)));
        const std::vector<TraceRecord> records = trace_compute(n, a, b, c);
        const Replay r = replay_from(records);
        REQUIRE(r.have_count);
        if (r.terms.empty()) {
            CHECK(r.count == 0);
        } else {
            REQUIRE(r.have_mu);
            CHECK(eval_sum(r.terms, r.mu) == r.count);
        }
        // Parse back through the text form as the CLI writes it.
        for (const TraceRecord& rec : records) {
            const TraceRecord round = parse_record(format_record(rec));
            CHECK(round.stage == rec.stage);
            CHECK(round.fields == rec.fields);
        }
        ++done;
    }
}

TEST_CASE("zero short-circuits still close the trace with a sum record") {
    const std::vector<TraceRecord> records = trace_compute(51, 6, 14, 22);
    REQUIRE(!records.empty());
    CHECK(records.front().stage == Stage::normalize);
    CHECK(records.front().get("zero") == "1");
    CHECK(records.back().stage == Stage::sum);
    CHECK(records.back().get("count") == "0");
}
