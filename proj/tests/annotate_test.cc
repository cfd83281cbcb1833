// Copyright 2026 The ACT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "act/annotate/annotator.h"
#include "act/cluster/clusterer.h"
#include "act/common/errors.h"
#include "act/ingest/source.h"
#include "act/parse/noise.h"
#include "act/parse/tokenizer.h"
#include "support/helpers.h"

namespace act::annotate {
namespace {

using Tokens = std::vector<std::string>;

Gazetteer small_gazetteer() {
  return Gazetteer::FromEntries({
      {"Sydney", 151.2093, -33.8688, 5312000, "AU"},
      {"North Sydney", 151.2070, -33.8390, 72000, "AU"},
      {"Sydney", -60.1942, 46.1368, 29904, "CA"},
      {"Melbourne", 144.9631, -37.8136, 5078000, "AU"},
      {"Perth", 115.8605, -31.9505, 2085000, "AU"},
      {"Perth", -3.4308, 56.3950, 47000, "GB"},
      {"Blue Mountains", 150.3119, -33.7150, 79000, "AU"},
  });
}

// Every contiguous span checked against every entry by its tokenized name;
// longest span, then population, then earliest start.
std::optional<GazetteerEntry> span_oracle(const Tokens& tokens, const std::vector<GazetteerEntry>& entries) {
  std::optional<GazetteerEntry> best;
  size_t best_len = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    for (size_t j = i + 1; j <= tokens.size(); ++j) {
      const Tokens span(tokens.begin() + static_cast<std::ptrdiff_t>(i), tokens.begin() + static_cast<std::ptrdiff_t>(j));
      for (const auto& e : entries) {
        if (parse::tokenize(e.name) != span) continue;
        const size_t len = j - i;
        if (!best || len > best_len || (len == best_len && e.population > best->population)) {
          best = e;
          best_len = len;
        }
      }
    }
  }
  return best;
}

TEST(Geotag, SingleMatch) {
  auto g = small_gazetteer();
  auto tag = geotag_text(Tokens{"fire", "near", "sydney"}, g);
  ASSERT_TRUE(tag);
  EXPECT_EQ(tag->place_name, "Sydney");
  EXPECT_EQ(tag->country, "AU");  // larger population wins the ambiguous name
  EXPECT_DOUBLE_EQ(tag->confidence, 0.5);
}

TEST(Geotag, LongestSpanWins) {
  auto g = small_gazetteer();
  const Tokens tokens{"north", "sydney", "oval"};
  auto tag = geotag_text(tokens, g);
  ASSERT_TRUE(tag);
  EXPECT_EQ(tag->place_name, "North Sydney");
  EXPECT_DOUBLE_EQ(tag->confidence, 2.0 / 3.0);
  auto want = span_oracle(tokens, g.entries());
  ASSERT_TRUE(want);
  EXPECT_EQ(want->name, tag->place_name);
}

TEST(Geotag, NoMatch) { EXPECT_FALSE(geotag_text(Tokens{"hello", "world"}, small_gazetteer())); }

TEST(Geotag, ConfidenceFormula) {
  EXPECT_DOUBLE_EQ(span_confidence(1), 0.5);
  EXPECT_DOUBLE_EQ(span_confidence(2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(span_confidence(3), 0.75);
  EXPECT_DOUBLE_EQ(span_confidence(4), 1.0);
  EXPECT_DOUBLE_EQ(span_confidence(7), 1.0);
}

TEST(Geotag, MatchesExhaustiveSpanOracle) {
  auto g = testing::shipped_gazetteer();
  auto source = ingest::open_stream("synthetic:21:400");
  size_t tagged = 0;
  while (auto r = source->Next()) {
    const Tokens tokens = parse::tokenize(r->text);
    auto tag = geotag_text(tokens, *g);
    auto want = span_oracle(tokens, g->entries());
    ASSERT_EQ(tag.has_value(), want.has_value()) << r->text;
    if (!tag) continue;
    ++tagged;
    EXPECT_EQ(tag->place_name, want->name);
    EXPECT_EQ(tag->country, want->country);
    EXPECT_GT(tag->confidence, 0.0);
    EXPECT_LE(tag->confidence, 1.0);
  }
  EXPECT_GT(tagged, 100u);
}

TEST(Geotag, SuperstringAlwaysWinsOverGeneratedGazetteers) {
  std::mt19937_64 rng(99);
  const Tokens vocab{"north", "south", "port", "mount", "lake", "river", "bay", "creek", "hill", "vale"};
  for (int round = 0; round < 300; ++round) {
    std::vector<GazetteerEntry> entries;
    const size_t n_entries = 2 + rng() % 6;
    for (size_t i = 0; i < n_entries; ++i) {
      std::string name;
      const size_t words = 1 + rng() % 3;
      for (size_t w = 0; w < words; ++w) name += (w ? " " : "") + vocab[rng() % vocab.size()];
      entries.push_back({name, 0.0, 0.0, static_cast<int64_t>(rng() % 1000), "AU"});
    }
    // A superstring of entry 0 with a tiny population.
    std::string super = entries[0].name + " " + vocab[rng() % vocab.size()];
    entries.push_back({super, 1.0, 1.0, 0, "AU"});

    Tokens text;
    for (size_t w = 0; w < 1 + rng() % 4; ++w) text.push_back("filler" + std::to_string(rng() % 3));
    for (const auto& t : parse::tokenize(super)) text.push_back(t);
    for (size_t w = 0; w < rng() % 4; ++w) text.push_back(vocab[rng() % vocab.size()]);

    auto g = Gazetteer::FromEntries(entries);
    auto tag = geotag_text(text, g);
    auto want = span_oracle(text, g.entries());
    ASSERT_TRUE(tag);
    ASSERT_TRUE(want);
    EXPECT_EQ(tag->place_name, want->name);
    EXPECT_EQ(tag->population, want->population);
    EXPECT_GE(parse::tokenize(tag->place_name).size(), parse::tokenize(super).size());
  }
}

TEST(Gazetteer, LoadsShippedFileAndRejectsBadRows) {
  auto g = testing::shipped_gazetteer();
  EXPECT_GT(g->size(), 40u);
  const Tokens ns{"north", "sydney"};
  ASSERT_TRUE(g->FindSpan(ns));
  EXPECT_EQ(g->FindSpan(ns)->country, "AU");
  testing::TempDir dir;
  testing::write_text(dir / "g.csv", "name,lat,lon,population,country\nX,95,0,1,AU\n");
  EXPECT_THROW(Gazetteer::Load(dir / "g.csv"), InvalidArgument);
  testing::write_text(dir / "h.csv", "name,lat,lon,population,country\nX,1,2\n");
  EXPECT_THROW(Gazetteer::Load(dir / "h.csv"), InvalidArgument);
}

TEST(Gazetteer, NearestWithinRadius) {
  auto g = small_gazetteer();
  const GazetteerEntry* e = g.Nearest({151.20, -33.85}, 50.0);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->name, "North Sydney");
  EXPECT_FALSE(g.Nearest({0.0, 0.0}, 50.0));
  // Brute-force check over a grid of probes.
  for (double lat = -40; lat <= -30; lat += 0.37) {
    for (double lon = 143; lon <= 153; lon += 0.41) {
      const GazetteerEntry* want = nullptr;
      double want_km = 0;
      for (const auto& c : g.entries()) {
        const double km = haversine_km({lon, lat}, c.point());
        if (km > 50.0) continue;
        if (!want || km < want_km || (km == want_km && c.population > want->population)) {
          want = &c;
          want_km = km;
        }
      }
      const GazetteerEntry* got = g.Nearest({lon, lat}, 50.0);
      EXPECT_EQ(got == nullptr, want == nullptr);
      if (got && want) {
        EXPECT_EQ(got->name + got->country, want->name + want->country);
      }
    }
  }
}

LocationSignal text_signal(const std::string& name, double lon, double lat, double confidence) {
  return {GeoTag{name, lon, lat, confidence, 1000, "AU"}, std::nullopt};
}

TEST(EventLocation, Majority) {
  auto g = small_gazetteer();
  std::vector<LocationSignal> m = {text_signal("Sydney", 151.2093, -33.8688, 0.5),
                                   text_signal("Sydney", 151.2093, -33.8688, 0.5),
                                   text_signal("Melbourne", 144.9631, -37.8136, 0.5),
                                   text_signal("Sydney", 151.2093, -33.8688, 0.5)};
  auto loc = resolve_event_location(m, g);
  ASSERT_TRUE(loc);
  EXPECT_EQ(loc->place_name, "Sydney");
}

TEST(EventLocation, NoSignal) {
  std::vector<LocationSignal> m(3);
  EXPECT_FALSE(resolve_event_location(m, small_gazetteer()));
}

TEST(EventLocation, TieBrokenByTotalConfidence) {
  LocationTally tally;
  std::vector<PlaceCandidate> a = {{"a|AU", "a", 1, 1, 10, 1.0}, {"a|AU", "a", 1, 1, 10, 0.8}};
  std::vector<PlaceCandidate> b = {{"b|AU", "b", 2, 2, 99999, 0.75}, {"b|AU", "b", 2, 2, 99999, 0.75}};
  add_candidates(tally, b);
  add_candidates(tally, a);
  EXPECT_DOUBLE_EQ(tally["a|AU"].total_confidence, 1.8);
  EXPECT_DOUBLE_EQ(tally["b|AU"].total_confidence, 1.5);
  auto loc = resolve_from_tally(tally);
  ASSERT_TRUE(loc);
  EXPECT_EQ(loc->place_name, "a");
  EXPECT_DOUBLE_EQ(loc->confidence, 0.9);
}

TEST(EventLocation, NativeCoordinatesSnapToGazetteer) {
  auto g = small_gazetteer();
  // Two native points near Sydney CBD snap to the same entry and outvote a
  // single text mention.
  std::vector<LocationSignal> m = {{std::nullopt, GeoPoint{151.21, -33.87}},
                                   {std::nullopt, GeoPoint{151.20, -33.86}},
                                   text_signal("Melbourne", 144.9631, -37.8136, 0.5)};
  auto loc = resolve_event_location(m, g);
  ASSERT_TRUE(loc);
  EXPECT_EQ(loc->place_name, "Sydney");
  EXPECT_DOUBLE_EQ(loc->confidence, 1.0);
  // Far from any entry the raw point is kept.
  std::vector<LocationSignal> lone = {{std::nullopt, GeoPoint{0.5, 0.5}}};
  auto raw = resolve_event_location(lone, g);
  ASSERT_TRUE(raw);
  EXPECT_DOUBLE_EQ(raw->lon, 0.5);
  EXPECT_DOUBLE_EQ(raw->lat, 0.5);
}

TEST(Category, SpecExamples) {
  const auto rules = CategoryRules::Defaults();
  EXPECT_EQ(categorize_post(Tokens{"bushfire", "sydney"}, rules), Category::kFire);
  EXPECT_EQ(categorize_post(Tokens{"flood", "fire"}, rules), Category::kFire);
  EXPECT_EQ(categorize_post(Tokens{"hello"}, rules), Category::kOther);
  EXPECT_EQ(categorize_post(Tokens{"hail", "tremor"}, rules), Category::kStorm);
  EXPECT_EQ(categorize_post(Tokens{"injured"}, rules), Category::kMedical);
}

TEST(Category, PermutationInvariant) {
  const auto rules = CategoryRules::Defaults();
  std::mt19937_64 rng(5);
  const Tokens vocab{"fire", "flood", "hail", "quake", "ambulance", "sydney", "crews", "smoke", "help"};
  for (int i = 0; i < 200; ++i) {
    Tokens t;
    for (size_t k = 0; k < 1 + rng() % 6; ++k) t.push_back(vocab[rng() % vocab.size()]);
    const Category c = categorize_post(t, rules);
    for (int p = 0; p < 5; ++p) {
      std::shuffle(t.begin(), t.end(), rng);
      EXPECT_EQ(categorize_post(t, rules), c);
    }
  }
}

TEST(Category, EventVote) {
  using C = Category;
  EXPECT_EQ(categorize_event(std::vector<C>{C::kFire, C::kFire, C::kOther}), C::kFire);
  EXPECT_EQ(categorize_event(std::vector<C>{C::kFlood, C::kStorm}), C::kFlood);
  EXPECT_EQ(categorize_event(std::vector<C>{C::kStorm, C::kFlood}), C::kFlood);
  EXPECT_EQ(categorize_event(std::vector<C>{C::kOther, C::kOther}), C::kOther);
  EXPECT_EQ(categorize_event(std::vector<C>{C::kOther, C::kOther, C::kOther, C::kMedical}), C::kMedical);
}

TEST(Category, RulesFile) {
  EXPECT_THROW(CategoryRules::FromJson(Json::parse(R"({"volcano":["lava"]})")), InvalidArgument);
  EXPECT_THROW(CategoryRules::FromJson(Json::parse(R"({"other":["x"]})")), InvalidArgument);
  auto r = CategoryRules::FromJson(Json::parse(R"({"flood":["Deluge"]})"));
  EXPECT_EQ(categorize_post(Tokens{"deluge"}, r), Category::kFlood);
  EXPECT_EQ(categorize_post(Tokens{"fire"}, r), Category::kOther);
  for (Category c : {Category::kFire, Category::kFlood, Category::kStorm, Category::kEarthquake,
                     Category::kMedical, Category::kOther}) {
    EXPECT_EQ(category_from_string(to_string(c)), c);
  }
  EXPECT_FALSE(category_from_string("volcano"));
}

SentimentLexicon toy_lexicon() {
  SentimentLexicon lex;
  lex.polarity = {{"great", 0.8}, {"bad", -0.4}};
  lex.anger = {"damn"};
  return lex;
}

TEST(Sentiment, NoMatches) {
  auto s = score_post(Tokens{"hello", "world"}, toy_lexicon());
  EXPECT_EQ(s, SentimentScore{});
}

TEST(Sentiment, OneExpletive) {
  auto s = score_post(Tokens{"damn", "fire"}, toy_lexicon());
  EXPECT_EQ(s.anger_hits, 1);
  EXPECT_TRUE(s.is_angry);
}

TEST(Sentiment, MeanPolarity) {
  auto s = score_post(Tokens{"great", "bad"}, toy_lexicon());
  EXPECT_NEAR(s.polarity, 0.2, 1e-12);
}

TEST(Sentiment, EventAggregation) {
  SentimentScore neutral;
  SentimentScore angry{-0.5, 1, true};
  EXPECT_EQ(aggregate_event_sentiment(std::vector<SentimentScore>{neutral, neutral}), EventSentiment{});
  auto quarter = aggregate_event_sentiment(std::vector<SentimentScore>{angry, neutral, neutral, neutral});
  EXPECT_DOUBLE_EQ(quarter.angry_fraction, 0.25);
  EXPECT_TRUE(quarter.flagged_angry);
  std::vector<SentimentScore> ten(9, neutral);
  ten.push_back(angry);
  auto tenth = aggregate_event_sentiment(ten);
  EXPECT_DOUBLE_EQ(tenth.angry_fraction, 0.1);
  EXPECT_FALSE(tenth.flagged_angry);
  std::vector<SentimentScore> fifth(4, neutral);
  fifth.push_back(angry);
  EXPECT_TRUE(aggregate_event_sentiment(fifth).flagged_angry);  // 0.2 is inclusive
}

TEST(Sentiment, ShippedLexiconBounds) {
  auto lex = testing::shipped_lexicon();
  EXPECT_FALSE(lex.anger.empty());
  for (const auto& [term, p] : lex.polarity) {
    EXPECT_GE(p, -1.0);
    EXPECT_LE(p, 1.0);
  }
  std::mt19937_64 rng(8);
  std::vector<std::string> terms;
  for (const auto& [t, p] : lex.polarity) terms.push_back(t);
  for (const auto& t : lex.anger) terms.push_back(t);
  terms.push_back("neutralword");
  std::vector<SentimentScore> scores;
  for (int i = 0; i < 500; ++i) {
    Tokens toks;
    for (size_t k = 0; k < rng() % 8; ++k) toks.push_back(terms[rng() % terms.size()]);
    auto s = score_post(toks, lex);
    EXPECT_GE(s.polarity, -1.0);
    EXPECT_LE(s.polarity, 1.0);
    EXPECT_EQ(s.is_angry, s.anger_hits >= 1);
    scores.push_back(s);
  }
  auto agg = aggregate_event_sentiment(scores);
  EXPECT_GE(agg.mean_polarity, -1.0);
  EXPECT_LE(agg.mean_polarity, 1.0);
  EXPECT_GE(agg.angry_fraction, 0.0);
  EXPECT_LE(agg.angry_fraction, 1.0);
}

TEST(Sentiment, LexiconLoadValidation) {
  testing::TempDir dir;
  testing::write_text(dir / "anger.txt", "damn\n");
  testing::write_text(dir / "bad.csv", "term,polarity\ngood,1.5\n");
  EXPECT_THROW(SentimentLexicon::Load(dir / "bad.csv", dir / "anger.txt"), InvalidArgument);
  testing::write_text(dir / "ok.csv", "term,polarity\nGood,0.5\n");
  auto lex = SentimentLexicon::Load(dir / "ok.csv", dir / "anger.txt");
  EXPECT_DOUBLE_EQ(lex.polarity.at("good"), 0.5);
  EXPECT_TRUE(lex.anger.contains("damn"));
}

// Incrementally maintained event annotations equal a from-scratch
// recomputation over the members.
TEST(EventAnnotations, IncrementalEqualsRecomputed) {
  Annotator annotator(testing::shipped_gazetteer(), CategoryRules::Defaults(), testing::shipped_lexicon());
  parse::Parser parser(parse::default_stopwords(), {});
  parse::NoiseFilter noise(parse::NoiseRules::Defaults());
  cluster::Clusterer clusterer;
  std::map<std::string, std::pair<parse::Post, PostAnnotations>> by_id;
  auto source = ingest::open_stream("synthetic:11:600");
  while (auto r = source->Next()) {
    parse::Post p = parser.parse(*r);
    if (by_id.contains(p.id) || !noise.Classify(p).keep) continue;
    PostAnnotations ann = annotator.Annotate(p);
    auto a = clusterer.Assign(p);
    clusterer.mutable_event(a.event_index).annotations.Add(ann, annotator.Places(p, ann), kDefaultAngerThreshold);
    by_id.emplace(p.id, std::make_pair(p, ann));
  }
  ASSERT_GT(clusterer.events().size(), 5u);
  for (const auto& e : clusterer.events()) {
    std::vector<Category> cats;
    std::vector<SentimentScore> scores;
    std::vector<LocationSignal> signals;
    for (const auto& id : e.member_ids) {
      const auto& [p, ann] = by_id.at(id);
      cats.push_back(ann.category);
      scores.push_back(ann.sentiment);
      signals.push_back({ann.geotag, p.coords});
    }
    EXPECT_EQ(e.annotations.category, categorize_event(cats)) << e.id;
    EXPECT_EQ(e.annotations.sentiment, aggregate_event_sentiment(scores)) << e.id;
    EXPECT_EQ(e.annotations.location, resolve_event_location(signals, annotator.gazetteer())) << e.id;
  }
}

}  // namespace
}  // namespace act::annotate
