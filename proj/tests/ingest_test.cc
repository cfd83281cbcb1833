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

#include <atomic>
#include <thread>

#include "act/common/errors.h"
#include "act/common/utf8.h"
#include "act/ingest/queue.h"
#include "act/ingest/source.h"
#include "act/ingest/synthetic.h"
#include "act/ingest/track.h"
#include "act/parse/tokenizer.h"
#include "support/helpers.h"

namespace act::ingest {
namespace {

using testing::TempDir;
using testing::write_text;

std::vector<RawPost> drain(PostSource& s) {
  std::vector<RawPost> out;
  while (auto r = s.Next()) out.push_back(std::move(*r));
  return out;
}

TEST(RawPost, ParsesCorpusLine) {
  RawPost r = parse_raw_post_line(
      R"({"id":"1","created_at":"2013-10-17T04:12:00Z","user":"NSWRFS","text":"Fire","coordinates":[151.2,-33.8]})",
      SourceTag::kReplay);
  EXPECT_EQ(r.id, "1");
  EXPECT_EQ(r.author, "NSWRFS");
  ASSERT_TRUE(r.coords);
  EXPECT_DOUBLE_EQ(r.coords->lon, 151.2);
  EXPECT_DOUBLE_EQ(r.coords->lat, -33.8);
  EXPECT_EQ(parse_raw_post_line(to_json(r).dump(), SourceTag::kReplay), r);
}

TEST(RawPost, RejectsInvalidRecords) {
  for (const char* bad : {R"({"created_at":"2013-10-17T04:12:00Z","user":"a","text":"x"})",
                          R"({"id":"","created_at":"2013-10-17T04:12:00Z","user":"a","text":"x"})",
                          R"({"id":"1","created_at":"yesterday","user":"a","text":"x"})",
                          R"({"id":"1","created_at":"2013-10-17T04:12:00Z","user":"a","text":"x","coordinates":[10,95]})",
                          R"({"id":"1","created_at":"2013-10-17T04:12:00Z","user":"a","text":"x","coordinates":[190,5]})",
                          R"(not json)", R"([1,2])"}) {
    EXPECT_THROW(parse_raw_post_line(bad, SourceTag::kReplay), InvalidArgument) << bad;
  }
}

TEST(CorpusSource, ThreeLinesInFileOrder) {
  TempDir dir;
  write_text(dir / "c.jsonl",
             R"({"id":"b","created_at":"2013-10-17T00:00:02Z","user":"u","text":"two"})"
             "\n"
             R"({"id":"a","created_at":"2013-10-17T00:00:01Z","user":"u","text":"one"})"
             "\n"
             R"({"id":"c","created_at":"2013-10-17T00:00:03Z","user":"u","text":"three"})"
             "\n");
  auto s = open_stream((dir / "c.jsonl").string());
  auto got = drain(*s);
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0].id, "b");
  EXPECT_EQ(got[1].id, "a");
  EXPECT_EQ(got[2].id, "c");
  EXPECT_EQ(s->skipped(), 0u);
}

TEST(CorpusSource, MalformedLineIsSkippedAndCounted) {
  TempDir dir;
  write_text(dir / "c.jsonl",
             R"({"id":"1","created_at":"2013-10-17T00:00:01Z","user":"u","text":"one"})"
             "\n{broken\n"
             R"({"id":"2","created_at":"2013-10-17T00:00:02Z","user":"u","text":"two"})"
             "\n"
             R"({"id":"3","created_at":"2013-10-17T00:00:03Z","user":"u","text":"three"})"
             "\n");
  CorpusSource s(dir / "c.jsonl");
  EXPECT_EQ(drain(s).size(), 3u);
  EXPECT_EQ(s.skipped(), 1u);
}

TEST(CorpusSource, UnreadableSourceIsFatal) {
  EXPECT_THROW(open_stream("/nonexistent/corpus.jsonl"), IoError);
}

TEST(Synthetic, SameSeedSameSequence) {
  SyntheticOptions opts;
  opts.seed = 42;
  opts.count = 100;
  SyntheticSource a(opts);
  SyntheticSource b(opts);
  auto xs = drain(a);
  auto ys = drain(b);
  ASSERT_EQ(xs.size(), 100u);
  std::string sa, sb;
  for (const auto& r : xs) sa += to_json(r).dump() + "\n";
  for (const auto& r : ys) sb += to_json(r).dump() + "\n";
  EXPECT_EQ(sa, sb);
  opts.seed = 43;
  SyntheticSource c(opts);
  auto zs = drain(c);
  std::string sc;
  for (const auto& r : zs) sc += to_json(r).dump() + "\n";
  EXPECT_NE(sa, sc);
}

TEST(Synthetic, OpenStreamSpec) {
  auto s = open_stream("synthetic:7:25");
  EXPECT_EQ(drain(*s).size(), 25u);
  EXPECT_THROW(open_stream("synthetic:7"), InvalidArgument);
  EXPECT_THROW(open_stream("synthetic:x:5"), InvalidArgument);
}

TEST(RemoteSource, StubServesCannedSequence) {
  StubRemoteSource canned("feed", {testing::raw("r1", "flood", testing::t0())});
  auto got = drain(canned);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].id, "r1");
  auto builtin = open_stream("remote:demo");
  EXPECT_EQ(builtin->Describe(), "remote:demo");
  auto records = drain(*builtin);
  EXPECT_FALSE(records.empty());
  for (const auto& r : records) EXPECT_EQ(r.source_tag, SourceTag::kRemote);
}

TEST(Track, HazardKeywordExample) {
  auto cfg = TrackConfig::Make({}, {"bushfire"});
  EXPECT_TRUE(matches_track(testing::raw("1", "Bushfire near Sydney", testing::t0()), cfg));
}

TEST(Track, WholeTokenRule) {
  auto cfg = TrackConfig::Make({}, {"fire"});
  EXPECT_FALSE(matches_track(testing::raw("1", "fireworks tonight", testing::t0()), cfg));
  EXPECT_TRUE(matches_track(testing::raw("2", "#fire tonight", testing::t0()), cfg));
  EXPECT_TRUE(matches_track(testing::raw("3", "FIRE!", testing::t0()), cfg));
}

TEST(Track, AccountMatchIgnoresCase) {
  auto cfg = TrackConfig::Make({"qldfes"}, {});
  EXPECT_TRUE(matches_track(testing::raw("1", "hello", testing::t0(), "QldFES"), cfg));
  EXPECT_FALSE(matches_track(testing::raw("2", "hello", testing::t0(), "other"), cfg));
}

TEST(Track, KeywordMatchesBeforeStopwordRemoval) {
  auto cfg = TrackConfig::Make({}, {"us"});
  EXPECT_TRUE(matches_track(testing::raw("1", "help us", testing::t0()), cfg));
}

TEST(Track, Validation) {
  EXPECT_THROW(TrackConfig{}.Validate(), InvalidArgument);
  TrackConfig upper;
  upper.keywords = {"Fire"};
  EXPECT_THROW(upper.Validate(), InvalidArgument);
  auto neg = TrackConfig::Make({}, {"fire"}, -1.0);
  EXPECT_THROW(neg.Validate(), InvalidArgument);
  EXPECT_NO_THROW(TrackConfig::Make({"a"}, {}).Validate());
}

TEST(Track, FilterSoundnessOverSyntheticStream) {
  auto cfg = TrackConfig::Make({"NSWRFS"}, {"fire", "flood"});
  auto s = open_stream("synthetic:5:300");
  size_t passed = 0;
  while (auto r = s->Next()) {
    if (!matches_track(*r, cfg)) continue;
    ++passed;
    bool ok = utf8::to_lower(r->author) == "nswrfs";
    for (const auto& t : parse::split_terms(r->text)) ok = ok || t == "fire" || t == "flood";
    EXPECT_TRUE(ok) << r->text;
  }
  EXPECT_GT(passed, 0u);
}

TEST(Pacer, ScalesGapsBySpeed) {
  std::vector<std::chrono::microseconds> sleeps;
  ReplayPacer pacer(2.0, [&](std::chrono::microseconds d) { sleeps.push_back(d); });
  const Timestamp t = testing::t0();
  pacer.Pace(t);
  pacer.Pace(t + Seconds(10));
  pacer.Pace(t + Seconds(4));  // out of order: no delay
  pacer.Pace(t + Seconds(12));
  ASSERT_EQ(sleeps.size(), 2u);
  EXPECT_EQ(sleeps[0], std::chrono::microseconds(5'000'000));
  EXPECT_EQ(sleeps[1], std::chrono::microseconds(1'000'000));
}

TEST(Pacer, SpeedZeroNeverSleeps) {
  int calls = 0;
  ReplayPacer pacer(0.0, [&](std::chrono::microseconds) { ++calls; });
  for (int i = 0; i < 5; ++i) pacer.Pace(testing::t0() + Seconds(i * 100));
  EXPECT_EQ(calls, 0);
}

TEST(Queue, BackPressureBlocksProducer) {
  BoundedQueue<int> q(2);
  std::atomic<int> pushed{0};
  std::thread producer([&] {
    for (int i = 0; i < 5; ++i) {
      q.Push(i);
      ++pushed;
    }
    q.Close();
  });
  std::this_thread::sleep_for(std::chrono::milliseconds(50));
  EXPECT_EQ(pushed.load(), 2);
  std::vector<int> got;
  while (auto v = q.Pop()) got.push_back(*v);
  producer.join();
  EXPECT_EQ(got, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Feeder, PreservesOrderAndReportsSkips) {
  TempDir dir;
  std::string body;
  for (int i = 0; i < 50; ++i) {
    body += R"({"id":")" + std::to_string(i) + R"(","created_at":"2013-10-17T00:00:00Z","user":"u","text":"t"})" "\n";
    if (i % 10 == 0) body += "garbage\n";
  }
  write_text(dir / "c.jsonl", body);
  CorpusSource source(dir / "c.jsonl");
  BoundedQueue<RawPost> q(3);
  ReplayPacer pacer(0.0);
  FeedResult result;
  std::thread t([&] { result = run_feeder(source, pacer, q); });
  int expect = 0;
  while (auto r = q.Pop()) EXPECT_EQ(r->id, std::to_string(expect++));
  t.join();
  EXPECT_EQ(expect, 50);
  EXPECT_EQ(result.emitted, 50u);
  EXPECT_EQ(result.skipped, 5u);
}

}  // namespace
}  // namespace act::ingest
