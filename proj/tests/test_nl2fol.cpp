#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainprover/nl2fol.hpp"

using namespace chainprover;
using namespace chainprover::nl2fol;

namespace {

PromptTemplate test_template() {
  return PromptTemplate{
      "Task header.\nPremises: {premises}\nConclusions: {conclusions}\n"};
}

NlTask cow_task() {
  return NlTask{{"The cow is cold.", "Every cold thing is icy."},
                {"The cow is icy."},
                "The cow is icy.",
                true};
}

const char* kGoodResponse =
    "Premises:\n"
    "cold(cow) ::: (1) The cow is cold.\n"
    "∀x (cold(x) → icy(x)) ::: (2) Every cold thing is icy.\n"
    "Conclusions:\n"
    "icy(cow) ::: (1) The cow is icy.\n"
    "icy(cow) ::: (2) The cow is icy.\n";

}  // namespace

TEST_CASE("split steps") {
  CHECK(split_steps("1) Sally is a dumpus. 2) Sally is a gorpus.") ==
        std::vector<std::string>{"Sally is a dumpus.", "Sally is a gorpus."});
  CHECK(split_steps("") == std::vector<std::string>{});
  CHECK(split_steps("A. B. C.").size() == 3);
  CHECK(split_steps("Is it so? Yes! Done.").size() == 3);
}

TEST_CASE("speculative filtering") {
  FilterResult r = filter_speculative({"Wren is not necessarily a gorpus.",
                                       "The tiger eats the dog.",
                                       "It is possible that A."});
  REQUIRE(r.kept.size() == 1);
  CHECK(r.kept[0].first == 1);
  CHECK(r.kept[0].second == "The tiger eats the dog.");  // byte-identical
  REQUIRE(r.dropped.size() == 2);
  CHECK(r.dropped[0].first == 0);

  // word boundaries: "maybe" does not match keyword "may"
  CHECK(filter_speculative({"Maybelle is a cat."}).kept.size() == 1);
  CHECK(filter_speculative({"It MAY rain."}).dropped.size() == 1);
}

TEST_CASE("answer extraction") {
  CHECK(extract_answer("...reasoning... Answer: True") == true);
  CHECK(extract_answer("True at first, but the answer is false") == false);
  CHECK_THROWS_AS(extract_answer("no verdict here"), AnswerExtractionError);
}

TEST_CASE("prompt assembly") {
  std::string p = build_prompt(test_template(), {"P one.", "P two."},
                               {"S one."}, "C final.");
  CHECK(p ==
        "Task header.\nPremises: (1) P one. (2) P two.\n"
        "Conclusions: (1) S one. (2) C final.\n");
  // determinism
  CHECK(build_prompt(test_template(), {"P one.", "P two."}, {"S one."},
                     "C final.") == p);
  // empty steps: conclusions hold only the candidate conclusion
  CHECK(build_prompt(test_template(), {"P."}, {}, "C.").find(
            "Conclusions: (1) C.") != std::string::npos);
  CHECK_THROWS(build_prompt(test_template(), {}, {}, "C."));
}

TEST_CASE("llm output parsing") {
  auto out = parse_llm_output("Cold(cow) ::: (1) The cow is cold.");
  REQUIRE(out.count(1));
  CHECK(fol::print_formula(fol::normalize(out[1])) == "cold(cow)");

  // broken left side goes through repair first
  out = parse_llm_output("p(a ::: (1) x");
  REQUIRE(out.count(1));
  CHECK(fol::print_formula(out[1]) == "p(a)");

  CHECK_THROWS_AS(parse_llm_output("p(a) ::: (1) a\nq(a) ::: (2) b", 5),
                  MissingIndexError);
  try {
    parse_llm_output("p(a) ::: (2) b", 2);
    FAIL("expected MissingIndexError");
  } catch (const MissingIndexError& e) {
    CHECK(e.missing == std::vector<int>{1});
  }
  CHECK_THROWS_AS(parse_llm_output("p(((( ::: (1) x"),
                  UnparseableFormulaError);
}

TEST_CASE("translate succeeds on first good attempt") {
  ScriptedLlmClient llm({kGoodResponse});
  TranslationResult r =
      translate(cow_task(), test_template(), llm, verify::VerifyOptions{});
  CHECK(r.attempts_used == 1);
  REQUIRE(r.premise_fols.size() == 2);
  REQUIRE(r.step_fols.size() == 1);
  CHECK(fol::print_formula(r.conclusion_fol) == "icy(cow)");
  CHECK(llm.requests().size() == 1);
}

TEST_CASE("translate retries on unparseable output, then succeeds") {
  ScriptedLlmClient llm({"garbage ::: broken", "more garbage", kGoodResponse});
  TranslationResult r =
      translate(cow_task(), test_template(), llm, verify::VerifyOptions{});
  CHECK(r.attempts_used == 3);
  CHECK(llm.requests().size() == 3);
}

TEST_CASE("translate retries when the conclusion contradicts the label") {
  // conclusion FOL verifies Unknown against the premises: wrong, regenerate
  std::string wrong =
      "Premises:\n"
      "cold(cow) ::: (1) a\n"
      "∀x (cold(x) → icy(x)) ::: (2) b\n"
      "Conclusions:\n"
      "icy(cow) ::: (1) c\n"
      "fluffy(cow) ::: (2) d\n";
  ScriptedLlmClient llm({wrong, wrong, wrong});
  CHECK_THROWS_AS(
      translate(cow_task(), test_template(), llm, verify::VerifyOptions{}),
      TranslationFailed);
  CHECK(llm.requests().size() == 3);  // the 3-attempt cap holds
}

TEST_CASE("no feedback: every attempt sends the identical prompt") {
  ScriptedLlmClient llm({"junk one", "junk ::: two", kGoodResponse});
  translate(cow_task(), test_template(), llm, verify::VerifyOptions{});
  REQUIRE(llm.requests().size() == 3);
  CHECK(llm.requests()[0] == llm.requests()[1]);
  CHECK(llm.requests()[1] == llm.requests()[2]);
  // no prior attempt output leaks into later requests
  CHECK(llm.requests()[2].find("junk") == std::string::npos);
}

TEST_CASE("translate exhausts the cap and never sends a fourth request") {
  ScriptedLlmClient llm({"bad", "bad", "bad", kGoodResponse});
  CHECK_THROWS_AS(
      translate(cow_task(), test_template(), llm, verify::VerifyOptions{}),
      TranslationFailed);
  CHECK(llm.requests().size() == 3);
}

TEST_CASE("step deduplication") {
  fol::FormulaPtr a = fol::parse_formula("∀x (lorpus(x) → numpus(x))");
  fol::FormulaPtr b = fol::parse_formula("p(a) ∧ q(a)");
  fol::FormulaPtr b_commuted = fol::parse_formula("q(a) ∧ p(a)");
  verify::VerifyOptions opts;

  std::vector<fol::FormulaPtr> twenty(20, a);
  CHECK(dedup_steps(twenty, opts) == std::vector<std::size_t>{0});
  CHECK(dedup_steps({a, b}, opts) == std::vector<std::size_t>{0, 1});
  CHECK(dedup_steps({b, b_commuted}, opts) == std::vector<std::size_t>{0});
}

TEST_CASE("template loading") {
  CHECK_THROWS_AS(PromptTemplate::load("/nonexistent/tpl.txt"),
                  TemplateMissingError);
}
