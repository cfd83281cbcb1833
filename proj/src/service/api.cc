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

#include "act/service/api.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "act/common/errors.h"
#include "act/common/utf8.h"
#include "act/store/query.h"

namespace act::service {
namespace {

using ParamSet = std::set<std::string_view>;

const ParamSet kFilterParams = {"bbox", "category", "q", "since", "until", "geotagged", "limit"};

void reject_unknown(const QueryParams& params, const ParamSet& allowed) {
  for (const auto& [key, value] : params) {
    if (!allowed.contains(key)) throw InvalidArgument(key, "unknown query parameter");
  }
}

// The single value of `key`, rejecting repeats.
std::optional<std::string> single(const QueryParams& params, const std::string& key) {
  auto [lo, hi] = params.equal_range(key);
  if (lo == hi) return std::nullopt;
  if (std::next(lo) != hi) throw InvalidArgument(key, "parameter given more than once");
  return lo->second;
}

double parse_double(std::string_view text, const std::string& field) {
  text = trim(text);
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidArgument(field, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

size_t parse_count(std::string_view text, const std::string& field, size_t max) {
  unsigned long long v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidArgument(field, "not a non-negative integer: '" + std::string(text) + "'");
  }
  if (v < 1 || v > max) throw InvalidArgument(field, "must be between 1 and " + std::to_string(max));
  return static_cast<size_t>(v);
}

size_t count_param(const QueryParams& params, const std::string& key, size_t fallback, size_t max) {
  auto v = single(params, key);
  return v ? parse_count(*v, key, max) : fallback;
}

bool parse_bool(std::string_view text, const std::string& field) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw InvalidArgument(field, "expected true or false");
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    out.push_back(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Json location_json(const annotate::EventLocation& loc) {
  return {{"name", loc.place_name}, {"lon", loc.lon}, {"lat", loc.lat}, {"confidence", loc.confidence}};
}

Json coords_json(const std::optional<GeoPoint>& p) {
  if (!p) return nullptr;
  return Json::array({p->lon, p->lat});
}

ApiResponse not_found(std::string_view id) { return error_response(404, "id", "unknown event '" + std::string(id) + "'"); }

}  // namespace

ApiResponse error_response(int status, std::string_view field, std::string_view message) {
  ApiResponse r;
  r.status = status;
  r.body = {{"error", status == 404 ? "not_found" : "invalid_argument"}, {"field", field}, {"message", message}};
  return r;
}

store::FilterQuery parse_filter_query(const QueryParams& params) {
  store::FilterQuery q;
  if (auto v = single(params, "bbox")) {
    auto parts = split_commas(*v);
    if (parts.size() != 4) throw InvalidArgument("bbox", "expected min_lon,min_lat,max_lon,max_lat");
    q.bbox = store::BBox{parse_double(parts[0], "bbox"), parse_double(parts[1], "bbox"),
                         parse_double(parts[2], "bbox"), parse_double(parts[3], "bbox")};
  }
  auto [lo, hi] = params.equal_range("category");
  if (lo != hi) {
    std::set<annotate::Category> cats;
    for (auto it = lo; it != hi; ++it) {
      for (std::string_view name : split_commas(it->second)) {
        auto c = annotate::category_from_string(trim(name));
        if (!c) throw InvalidArgument("category", "unknown category '" + std::string(name) + "'");
        cats.insert(*c);
      }
    }
    q.categories = std::move(cats);
  }
  if (auto v = single(params, "q")) q.keyword = utf8::to_lower(trim(*v));
  if (auto v = single(params, "since")) q.since = parse_timestamp(*v, "since");
  if (auto v = single(params, "until")) q.until = parse_timestamp(*v, "until");
  if (auto v = single(params, "geotagged")) q.geotagged = parse_bool(*v, "geotagged");
  if (auto v = single(params, "limit")) q.limit = parse_count(*v, "limit", store::FilterQuery::kMaxLimit);
  q.Validate();
  return q;
}

Json event_summary_json(const cluster::Event& e) {
  Json j = {{"id", e.id},
            {"headline", cluster::headline(e)},
            {"category", annotate::to_string(e.category())},
            {"first_seen", format_timestamp(e.first_seen)},
            {"last_seen", format_timestamp(e.last_seen)},
            {"post_count", e.post_count()},
            {"flagged_angry", e.sentiment().flagged_angry}};
  if (e.location()) j["location"] = location_json(*e.location());
  return j;
}

Json event_detail_json(const Snapshot& snap, const cluster::Event& e) {
  Json j = event_summary_json(e);
  const auto& s = e.sentiment();
  j["sentiment"] = {{"mean_polarity", s.mean_polarity},
                    {"angry_fraction", s.angry_fraction},
                    {"flagged_angry", s.flagged_angry}};
  std::vector<std::pair<const cluster::TextEntry*, const store::StoredPost*>> entries;
  entries.reserve(e.unique_texts.size());
  for (const auto& [text, entry] : e.unique_texts) entries.emplace_back(&entry, snap.FindPost(entry.representative_id));
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first->representative_time != b.first->representative_time) {
      return a.first->representative_time > b.first->representative_time;
    }
    return a.first->representative_id < b.first->representative_id;
  });
  Json content = Json::array();
  for (const auto& [entry, stored] : entries) {
    Json c = {{"id", entry->representative_id},
              {"created_at", format_timestamp(entry->representative_time)},
              {"count", entry->count}};
    if (stored) {
      const parse::Post& p = stored->post;
      c["author"] = p.author;
      c["text"] = p.text;
      c["is_agency"] = p.is_agency;
      c["is_angry"] = stored->annotations.sentiment.is_angry;
      c["coordinates"] = coords_json(p.coords);
    }
    content.push_back(std::move(c));
  }
  j["content"] = std::move(content);
  return j;
}

Json related_json(std::span<const cluster::RelatedEvent> related) {
  Json out = Json::array();
  for (const auto& r : related) {
    Json j = event_summary_json(*r.event);
    j["score"] = r.score;
    out.push_back(std::move(j));
  }
  return out;
}

Json media_json(std::span<const media::RankedMedia> ranked) {
  Json out = Json::array();
  for (const auto& m : ranked) {
    Json j = {{"id", m.item.id},
              {"url", m.item.url},
              {"caption", m.item.caption},
              {"origin", media::to_string(m.item.origin)},
              {"created_at", format_timestamp(m.item.created_at)},
              {"coordinates", coords_json(m.item.coords)}};
    j["score"] = m.score ? Json(*m.score) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

Json terms_json(std::span<const cluster::TermCount> terms) {
  Json out = Json::array();
  for (const auto& [term, count] : terms) out.push_back({{"term", term}, {"count", count}});
  return out;
}

Json agency_post_json(const parse::Post& p) {
  return {{"id", p.id},
          {"author", p.author},
          {"text", p.text},
          {"created_at", format_timestamp(p.created_at)},
          {"coordinates", coords_json(p.coords)}};
}

Api::Api(const SnapshotPublisher& publisher, annotate::CategoryRules category_rules,
         media::MediaWeights media_weights)
    : publisher_(publisher), category_rules_(std::move(category_rules)), media_weights_(media_weights) {}

ApiResponse Api::Get(std::string_view path, const QueryParams& params) const {
  auto snap = publisher_.Current();
  constexpr std::string_view kEvents = "/events";
  try {
    if (path == kEvents) return Events(*snap, params);
    if (path == "/terms") return Terms(*snap, params);
    if (path == "/agencies") return Agencies(*snap, params);
    if (path == "/health") return Health(*snap, params);
    if (path.starts_with("/events/")) {
      std::string_view rest = path.substr(kEvents.size() + 1);
      size_t slash = rest.find('/');
      std::string_view id = rest.substr(0, slash);
      if (!id.empty()) {
        if (slash == std::string_view::npos) return EventDetail(*snap, id, params);
        std::string_view tail = rest.substr(slash);
        if (tail == "/related") return Related(*snap, id, params);
        if (tail == "/media") return Media(*snap, id, params);
      }
    }
  } catch (const InvalidArgument& e) {
    return error_response(400, e.field(), e.what());
  }
  return error_response(404, "path", "no such endpoint: " + std::string(path));
}

ApiResponse Api::Events(const Snapshot& snap, const QueryParams& params) const {
  reject_unknown(params, kFilterParams);
  const store::FilterQuery q = parse_filter_query(params);
  const auto all = snap.EventPtrs();
  ApiResponse r;
  r.body = Json::array();
  for (const cluster::Event* e : store::query_events(q, all)) r.body.push_back(event_summary_json(*e));
  if (q.bbox_ignored()) r.headers["x-bbox-ignored"] = "true";
  return r;
}

ApiResponse Api::EventDetail(const Snapshot& snap, std::string_view id, const QueryParams& params) const {
  reject_unknown(params, {});
  const cluster::Event* e = snap.FindEvent(id);
  if (!e) return not_found(id);
  return {200, event_detail_json(snap, *e), {}};
}

ApiResponse Api::Related(const Snapshot& snap, std::string_view id, const QueryParams& params) const {
  reject_unknown(params, {"k"});
  const size_t k = count_param(params, "k", kDefaultRelatedK, kMaxK);
  const cluster::Event* e = snap.FindEvent(id);
  if (!e) return not_found(id);
  const auto all = snap.EventPtrs();
  return {200, related_json(cluster::related_events(*e, all, k)), {}};
}

std::vector<media::RankedMedia> Api::RankedMediaFor(const Snapshot& snap, const cluster::Event& e) const {
  {
    std::lock_guard lock(cache_mu_);
    auto it = media_cache_.find(e.id);
    if (it != media_cache_.end() && it->second.revision == e.revision && it->second.index == snap.media &&
        it->second.media_version == snap.media->version()) {
      return it->second.ranked;
    }
  }
  const auto members = snap.Members(e);
  auto ranked = media::find_media(e, members, *snap.media, category_rules_, kMaxK, media_weights_);
  std::lock_guard lock(cache_mu_);
  media_cache_[e.id] = CachedMedia{e.revision, snap.media->version(), snap.media, ranked};
  return ranked;
}

ApiResponse Api::Media(const Snapshot& snap, std::string_view id, const QueryParams& params) const {
  reject_unknown(params, {"k"});
  const size_t k = count_param(params, "k", kDefaultMediaK, kMaxK);
  const cluster::Event* e = snap.FindEvent(id);
  if (!e) return not_found(id);
  auto ranked = RankedMediaFor(snap, *e);
  if (ranked.size() > k) ranked.resize(k);
  return {200, media_json(ranked), {}};
}

ApiResponse Api::Terms(const Snapshot& snap, const QueryParams& params) const {
  ParamSet allowed = kFilterParams;
  allowed.insert("k");
  reject_unknown(params, allowed);
  const size_t k = count_param(params, "k", kDefaultTermsK, kMaxK);
  QueryParams filter = params;
  filter.erase("k");
  const store::FilterQuery q = parse_filter_query(filter);
  const auto all = snap.EventPtrs();
  const auto selection = store::query_events(q, all);
  ApiResponse r;
  r.body = terms_json(cluster::trending_terms(selection, k));
  if (q.bbox_ignored()) r.headers["x-bbox-ignored"] = "true";
  return r;
}

ApiResponse Api::Agencies(const Snapshot& snap, const QueryParams& params) const {
  reject_unknown(params, {"limit"});
  const size_t limit = count_param(params, "limit", kDefaultAgencyLimit, store::FilterQuery::kMaxLimit);
  std::vector<const parse::Post*> posts;
  posts.reserve(snap.agency_posts.size());
  for (size_t idx : snap.agency_posts) posts.push_back(&snap.posts[idx]->post);
  std::sort(posts.begin(), posts.end(), [](const parse::Post* a, const parse::Post* b) {
    if (a->created_at != b->created_at) return a->created_at > b->created_at;
    return a->id > b->id;
  });
  if (posts.size() > limit) posts.resize(limit);
  ApiResponse r;
  r.body = Json::array();
  for (const parse::Post* p : posts) r.body.push_back(agency_post_json(*p));
  return r;
}

ApiResponse Api::Health(const Snapshot& snap, const QueryParams& params) const {
  reject_unknown(params, {});
  ApiResponse r;
  r.body = {{"status", "ok"},
            {"snapshot_seq", snap.seq},
            {"posts_ingested", snap.counters.posts_ingested},
            {"events_count", snap.events.size()}};
  if (!snap.events.empty()) {
    Timestamp from = snap.events.front()->first_seen;
    Timestamp to = snap.events.front()->last_seen;
    for (const auto& e : snap.events) {
      from = std::min(from, e->first_seen);
      to = std::max(to, e->last_seen);
    }
    r.body["time_range"] = {{"from", format_timestamp(from)}, {"to", format_timestamp(to)}};
  }
  return r;
}

}  // namespace act::service
