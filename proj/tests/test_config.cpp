#include <doctest.h>

#include "stringcone/jsonio.hpp"

using namespace stringcone;

TEST_CASE("run config round trip") {
  RunConfig cfg;
  cfg.type = "D4";
  cfg.words = {"2 1 3 4 2 1 3 4 2 1 3 4"};
  cfg.letters = {2};
  cfg.format = "json";
  cfg.output_path = "out.json";
  cfg.conventions.type2_reverse = true;
  cfg.sample_seed = 12345;
  cfg.box_bound = 3;
  cfg.caps.word_cap = 77;
  const json j = run_config_to_json(cfg);
  CHECK(run_config_from_json(j) == cfg);
  CHECK(run_config_from_json(json::parse(j.dump())) == cfg);
}

TEST_CASE("word text round trip") {
  CHECK(parse_word("2 1 4 2 3 2 4 2 1 2 3 4").letters ==
        std::vector<int>{2, 1, 4, 2, 3, 2, 4, 2, 1, 2, 3, 4});
  CHECK(parse_word("1,2,1") == parse_word("1 2 1"));
  CHECK(word_str(parse_word(" 1  2\t1 ")) == "1 2 1");
  CHECK_THROWS_AS(parse_word("1 x 2"), invalid_input);
}

TEST_CASE("seed json round trip") {
  const CartanDatum a2 = cartan_matrix("A2");
  const Seed s = seed_from_word(a2, parse_word("1 2 1"));
  const Seed back = seed_from_json(seed_to_json(s));
  CHECK(back == s);
  CHECK(back.word == s.word);
}

TEST_CASE("string system json shape") {
  const CartanDatum a2 = cartan_matrix("A2");
  const json j = string_system_to_json(string_system(a2, parse_word("1 2 1")));
  CHECK(j.at("word") == json::array({1, 2, 1}));
  CHECK(j.at("letters").contains("1"));
  CHECK(j.at("letters").at("1").at("forms") == json::array({{0, 0, 1}}));
  CHECK(j.at("letters").at("2").at("forms").size() == 2);
}
