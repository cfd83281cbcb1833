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

#include <random>

#include "act/cluster/clusterer.h"
#include "act/common/errors.h"
#include "act/media/finder.h"
#include "act/media/media_index.h"
#include "act/parse/tokenizer.h"
#include "support/helpers.h"
#include "support/oracles.h"

namespace act::media {
namespace {

using testing::t0;
using Tokens = std::vector<std::string>;

MediaItem item(const std::string& id, const std::string& caption, Timestamp at,
               std::optional<GeoPoint> where = std::nullopt) {
  MediaItem m;
  m.id = id;
  m.url = "http://img.example/" + id + ".jpg";
  m.caption = caption;
  m.caption_tokens = parse::tokenize(caption);
  m.created_at = at;
  m.coords = where;
  return m;
}

// An event with the given top terms, category, location and span.
cluster::Event make_event(std::map<std::string, int64_t, std::less<>> terms, annotate::Category cat,
                          std::optional<GeoPoint> where, Timestamp first, Timestamp last) {
  cluster::Event e;
  e.id = "ev-x";
  e.term_counts = std::move(terms);
  e.annotations.category = cat;
  if (where) e.annotations.location = annotate::EventLocation{where->lon, where->lat, "here", 1.0};
  e.first_seen = first;
  e.last_seen = last;
  return e;
}

annotate::CategoryRules no_rules() { return annotate::CategoryRules{}; }

TEST(IndexMedia, EmptyFile) {
  testing::TempDir dir;
  testing::write_text(dir / "m.jsonl", "");
  IndexReport report;
  auto index = index_media(dir / "m.jsonl", &report);
  EXPECT_TRUE(index.empty());
  EXPECT_EQ(report.indexed, 0u);
}

TEST(IndexMedia, SkipsMalformed) {
  testing::TempDir dir;
  testing::write_text(dir / "m.jsonl",
                      R"({"id":"a","url":"u/a.jpg","caption":"flood","created_at":"2013-10-17T00:00:00Z"})" "\n"
                      R"({"id":"b","url":"u/b.jpg","caption":"fire","created_at":"bad"})" "\n"
                      R"({"id":"c","url":"u/c.jpg","caption":"smoke","created_at":"2013-10-17T01:00:00Z","coordinates":[150.3,-33.7]})" "\n"
                      R"({"id":"d","url":"u/d.jpg","caption":"","created_at":"2013-10-17T02:00:00Z"})" "\n");
  IndexReport report;
  auto index = index_media(dir / "m.jsonl", &report);
  EXPECT_EQ(index.size(), 3u);
  EXPECT_EQ(report.skipped, 1u);
  EXPECT_EQ(index.WithToken("smoke").size(), 1u);
  EXPECT_EQ(index.InCell({150.4, -33.8}).size(), 1u);
  EXPECT_THROW(index_media(dir / "missing.jsonl"), IoError);
}

TEST(IndexMedia, ReindexGivesIdenticalDump) {
  const auto path = testing::data_path("media/media_corpus.jsonl");
  EXPECT_EQ(index_media(path).Dump(), index_media(path).Dump());
  EXPECT_GT(index_media(path).size(), 100u);
}

TEST(IndexMedia, DuplicateIdKeepsFirst) {
  MediaIndex index;
  EXPECT_TRUE(index.Add(item("a", "first", t0())));
  EXPECT_FALSE(index.Add(item("a", "second", t0())));
  EXPECT_EQ(index.Find("a")->caption, "first");
  EXPECT_EQ(index.version(), 1u);
}

TEST(IndexMedia, WindowIsInclusiveAndOrdered) {
  MediaIndex index;
  index.Add(item("late", "x", t0() + Seconds(20)));
  index.Add(item("b", "x", t0() + Seconds(10)));
  index.Add(item("a", "x", t0() + Seconds(10)));
  index.Add(item("early", "x", t0()));
  auto w = index.InWindow(t0(), t0() + Seconds(10));
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0]->id, "early");
  EXPECT_EQ(w[1]->id, "a");
  EXPECT_EQ(w[2]->id, "b");
}

TEST(EmbeddedMedia, ExtensionRule) {
  auto p = testing::post("1", "look https://a/b.JPG", t0());
  EXPECT_EQ(embedded_media(p).size(), 1u);
  EXPECT_TRUE(embedded_media(testing::post("2", "see https://a/page.html", t0())).empty());
  auto q = testing::post("3", "pic https://a/x.png?s=1", t0(), "u", GeoPoint{150, -33});
  auto items = embedded_media(q);
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0].origin, MediaOrigin::kPostEmbedded);
  EXPECT_EQ(items[0].created_at, t0());
  EXPECT_EQ(items[0].coords, q.coords);
  EXPECT_TRUE(is_image_url("http://x/y.gif#frag"));
  EXPECT_TRUE(is_image_url("http://x/y.jpeg"));
  EXPECT_FALSE(is_image_url("http://x/jpg"));
}

TEST(FindMedia, MaximalFactorsScoreOne) {
  const GeoPoint here{150.31, -33.71};
  auto e = make_event({{"smoke", 3}, {"katoomba", 2}}, annotate::Category::kOther, here, t0(), t0() + std::chrono::hours(2));
  MediaIndex index;
  index.Add(item("m1", "smoke katoomba", t0() + std::chrono::hours(1), here));
  auto r = find_media(e, {}, index, no_rules(), 12);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(*r[0].score, 1.0, 1e-12);
}

TEST(FindMedia, OutsideWindowExcludedRegardlessOfContent) {
  const GeoPoint here{150.31, -33.71};
  auto e = make_event({{"smoke", 3}}, annotate::Category::kOther, here, t0(), t0() + std::chrono::hours(2));
  MediaIndex index;
  index.Add(item("late", "smoke", t0() + std::chrono::hours(14) + Seconds(1), here));
  index.Add(item("early", "smoke", t0() - std::chrono::hours(12) - Seconds(1), here));
  index.Add(item("edge", "smoke", t0() + std::chrono::hours(14), here));
  auto r = find_media(e, {}, index, no_rules(), 12);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].item.id, "edge");
}

TEST(FindMedia, HalfJaccardNoGeoInsideSpan) {
  auto e = make_event({{"flood", 2}, {"lismore", 1}}, annotate::Category::kOther, std::nullopt, t0(),
                      t0() + std::chrono::hours(1));
  MediaIndex index;
  index.Add(item("m", "flood river lismore", t0() + std::chrono::minutes(30)));  // 2 shared of 3 -> not 0.5
  index.Add(item("h", "flood river", t0() + std::chrono::minutes(30)));          // 1 of 3
  index.Add(item("j", "flood", t0() + std::chrono::minutes(30)));                // 1 of 2
  auto r = find_media(e, {}, index, no_rules(), 12);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].item.id, "m");
  EXPECT_EQ(r[1].item.id, "j");
  EXPECT_NEAR(*r[1].score, 0.45, 1e-12);
  EXPECT_NEAR(*r[2].score, 0.5 / 3.0 + 0.2, 1e-12);
}

TEST(FindMedia, CutoffAndTieOrder) {
  auto e = make_event({{"quake", 1}}, annotate::Category::kOther, std::nullopt, t0(), t0());
  MediaIndex index;
  index.Add(item("newer", "quake", t0() + std::chrono::hours(1)));
  index.Add(item("older", "quake", t0() - std::chrono::hours(1)));
  index.Add(item("weak", "unrelated words", t0() + std::chrono::hours(11)));  // 0.2*exp(-11/12) < 0.1
  auto r = find_media(e, {}, index, no_rules(), 12);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].item.id, "older");
  EXPECT_EQ(r[1].item.id, "newer");
  EXPECT_EQ(*r[0].score, *r[1].score);
}

TEST(FindMedia, EmbeddedFirstDeduplicatedAndCapped) {
  auto p1 = testing::post("1", "smoke http://x/a.jpg http://x/b.png", t0());
  auto p2 = testing::post("2", "smoke again http://x/a.jpg", t0());
  std::vector<const parse::Post*> members{&p1, &p2};
  auto e = make_event({{"smoke", 2}}, annotate::Category::kOther, std::nullopt, t0(), t0());
  MediaIndex index;
  for (int i = 0; i < 20; ++i) index.Add(item("m" + std::to_string(i), "smoke", t0() + Seconds(i)));
  auto r = find_media(e, members, index, no_rules(), 12);
  ASSERT_EQ(r.size(), 12u);
  EXPECT_EQ(r[0].item.id, "http://x/a.jpg");
  EXPECT_EQ(r[1].item.id, "http://x/b.png");
  EXPECT_FALSE(r[0].score);
  EXPECT_FALSE(r[1].score);
  for (size_t i = 2; i < r.size(); ++i) EXPECT_TRUE(r[i].score);
  EXPECT_EQ(find_media(e, members, index, no_rules(), 1).size(), 1u);
}

TEST(FindMedia, QueryTermsIncludeCategoryKeywords) {
  auto e = make_event({{"a1", 9}, {"a2", 8}, {"a3", 7}, {"a4", 6}, {"a5", 5}, {"a6", 4}}, annotate::Category::kFlood,
                      std::nullopt, t0(), t0());
  auto q = build_media_query(e, annotate::CategoryRules::Defaults());
  EXPECT_EQ(q.terms, (std::set<std::string>{"a1", "a2", "a3", "a4", "a5", "flood", "flooding", "inundated"}));
  EXPECT_EQ(q.from, t0() - std::chrono::hours(12));
  EXPECT_EQ(q.to, t0() + std::chrono::hours(12));
}

TEST(FindMedia, InvariantsOverShippedCorpus) {
  auto index = index_media(testing::data_path("media/media_corpus.jsonl"));
  const auto posts = testing::clusterable_posts(testing::data_path("corpus/synthetic_5000.jsonl"));
  cluster::Clusterer c;
  std::map<std::string, const parse::Post*> by_id;
  for (size_t i = 0; i < 1500 && i < posts.size(); ++i) {
    c.Assign(posts[i]);
    by_id[posts[i].id] = &posts[i];
  }
  const auto rules = annotate::CategoryRules::Defaults();
  size_t scored_total = 0;
  for (const auto& e : c.events()) {
    std::vector<const parse::Post*> members;
    for (const auto& id : e.member_ids) members.push_back(by_id.at(id));
    auto r = find_media(e, members, index, rules, 12);
    auto again = find_media(e, members, index, rules, 12);
    EXPECT_EQ(r, again);
    EXPECT_LE(r.size(), 12u);
    const auto q = build_media_query(e, rules);
    bool in_embedded = true;
    std::optional<double> prev;
    for (const auto& m : r) {
      if (!m.score) {
        EXPECT_TRUE(in_embedded) << "embedded item after scored items";
        continue;
      }
      in_embedded = false;
      ++scored_total;
      EXPECT_GE(m.item.created_at, q.from);
      EXPECT_LE(m.item.created_at, q.to);
      EXPECT_GE(*m.score, 0.1);
      EXPECT_LE(*m.score, 1.0);
      if (prev) {
        EXPECT_LE(*m.score, *prev);
      }
      prev = m.score;
    }
  }
  EXPECT_GT(scored_total, 0u);
}

TEST(ReplayMediaSource, FetchesOnce) {
  ReplayMediaSource src(testing::data_path("media/remote_media.jsonl"));
  auto first = src.Fetch();
  EXPECT_FALSE(first.empty());
  EXPECT_TRUE(src.Fetch().empty());
}

}  // namespace
}  // namespace act::media
