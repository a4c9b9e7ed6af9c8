#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fedspeech/error.hpp"
#include "fedspeech/serial.hpp"

namespace fedspeech {

struct AudioClip {
  std::vector<float> samples;  // amplitudes in [-1, 1]
  int sample_rate = 0;
  std::string subject_id;
  std::optional<int> label_phq8;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

enum class Speaker : uint8_t { Participant, Interviewer };

struct TranscriptEntry {
  double start_s = 0.0;
  double stop_s = 0.0;
  Speaker speaker = Speaker::Interviewer;
  std::string text;
};

struct AudioWindow {
  std::vector<float> samples;
  std::string subject_id;
  int segment_index = 0;
  int window_index = 0;
  double length_s = 1.0;
  double hop_s = 0.1;
};

// Per-run ingest bookkeeping. Short segments and out-of-range transcript
// entries are not errors; they are counted here.
struct IngestStats {
  size_t clips = 0;
  size_t participant_entries = 0;
  size_t entries_skipped_beyond_duration = 0;
  size_t entries_clipped_to_duration = 0;
  size_t segments = 0;
  size_t segments_too_short = 0;
  size_t windows = 0;
};

// ---------------------------------------------------------------------------
// WAV decode/encode. RIFF/WAVE, PCM 16-bit signed little-endian. Multi-channel
// input takes channel 0.
// ---------------------------------------------------------------------------

inline AudioClip decode_wav(const std::vector<uint8_t>& bytes) {
  ByteReader r(bytes);
  char tag[4];

  r.raw(tag, 4);
  if (std::memcmp(tag, "RIFF", 4) != 0) throw FormatError("not a RIFF container");
  r.u32();  // declared riff size; chunk walk below is bounds-checked anyway
  r.raw(tag, 4);
  if (std::memcmp(tag, "WAVE", 4) != 0) throw FormatError("RIFF is not WAVE");

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  AudioClip clip;
  bool have_data = false;

  while (!r.eof() && r.remaining() >= 8) {
    r.raw(tag, 4);
    uint32_t chunk_size = r.u32();
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw FormatError("fmt chunk too small");
      format = r.u16();
      channels = r.u16();
      rate = r.u32();
      r.u32();  // byte rate
      r.u16();  // block align
      bits = r.u16();
      for (uint32_t i = 16; i < chunk_size; ++i) r.u8();
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw FormatError("data chunk before fmt chunk");
      if (format == 3) throw UnsupportedError("IEEE float WAV not supported, PCM16 required");
      if (format != 1) throw UnsupportedError("unsupported WAV format code " + std::to_string(format));
      if (bits != 16) throw UnsupportedError("unsupported bit depth " + std::to_string(bits) + ", PCM16 required");
      if (channels == 0) throw FormatError("zero channels");
      if (rate == 0) throw FormatError("zero sample rate");
      size_t frame_bytes = 2u * channels;
      size_t n_frames = chunk_size / frame_bytes;
      clip.samples.resize(n_frames);
      for (size_t i = 0; i < n_frames; ++i) {
        int16_t v = static_cast<int16_t>(r.u16());
        clip.samples[i] = static_cast<float>(v) / 32768.0f;
        for (uint16_t c = 1; c < channels; ++c) r.u16();  // drop other channels
      }
      // trailing odd padding byte per RIFF rules
      if ((chunk_size & 1u) && r.remaining() > 0) r.u8();
      have_data = true;
    } else {
      // skip unknown chunk
      size_t skip = std::min<size_t>(chunk_size + (chunk_size & 1u), r.remaining());
      for (size_t i = 0; i < skip; ++i) r.u8();
    }
  }
  if (!have_fmt) throw FormatError("missing fmt chunk");
  if (!have_data) throw FormatError("missing data chunk");
  clip.sample_rate = static_cast<int>(rate);
  return clip;
}

inline std::vector<uint8_t> encode_wav_pcm16(const std::vector<float>& samples, int sample_rate) {
  ByteWriter w;
  uint32_t data_bytes = static_cast<uint32_t>(samples.size() * 2);
  w.raw("RIFF", 4);
  w.u32(36 + data_bytes);
  w.raw("WAVE", 4);
  w.raw("fmt ", 4);
  w.u32(16);
  w.u16(1);  // PCM
  w.u16(1);  // mono
  w.u32(static_cast<uint32_t>(sample_rate));
  w.u32(static_cast<uint32_t>(sample_rate * 2));
  w.u16(2);
  w.u16(16);
  w.raw("data", 4);
  w.u32(data_bytes);
  for (float s : samples) {
    double v = std::lround(static_cast<double>(s) * 32768.0);
    v = std::clamp(v, -32768.0, 32767.0);
    w.u16(static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  return w.take();
}

// ---------------------------------------------------------------------------
// Transcript CSV: start_time, stop_time, speaker, value. Comma or tab
// delimited (DAIC-WOZ transcripts are tab separated). Speaker matched
// case-insensitively against "participant"; everything else is interviewer.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_row(const std::string& line) {
  char delim = line.find('\t') != std::string::npos ? '\t' : ',';
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == delim) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    size_t a = f.find_first_not_of(" \r\n");
    size_t b = f.find_last_not_of(" \r\n");
    f = (a == std::string::npos) ? "" : f.substr(a, b - a + 1);
  }
  return out;
}

inline std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace detail

inline std::vector<TranscriptEntry> parse_transcript_csv(const std::string& text) {
  std::vector<TranscriptEntry> entries;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_row(line);
    if (!header_seen) {
      header_seen = true;
      if (!fields.empty() && detail::lower(fields[0]).find("start") != std::string::npos) continue;
    }
    if (fields.size() < 3)
      throw FormatError("transcript row " + std::to_string(lineno) + ": expected >=3 columns");
    TranscriptEntry e;
    try {
      e.start_s = std::stod(fields[0]);
      e.stop_s = std::stod(fields[1]);
    } catch (const std::exception&) {
      throw FormatError("transcript row " + std::to_string(lineno) + ": bad timestamp");
    }
    if (e.start_s < 0.0 || e.stop_s <= e.start_s)
      throw FormatError("transcript row " + std::to_string(lineno) + ": stop must exceed start");
    e.speaker = detail::lower(fields[2]) == "participant" ? Speaker::Participant : Speaker::Interviewer;
    if (fields.size() > 3) e.text = fields[3];
    entries.push_back(std::move(e));
  }
  return entries;
}

inline std::string format_transcript_csv(const std::vector<TranscriptEntry>& entries) {
  std::ostringstream out;
  out << "start_time,stop_time,speaker,value\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& e : entries) {
    out << e.start_s << ',' << e.stop_s << ','
        << (e.speaker == Speaker::Participant ? "Participant" : "Interviewer") << ',' << e.text << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Segment extraction and windowing.
// ---------------------------------------------------------------------------

// One clip per participant entry; sample index arithmetic is floor(start*rate)
// inclusive to floor(stop*rate) exclusive. Entries past the clip end are
// skipped (counted); entries crossing it are clipped.
inline std::vector<AudioClip> extract_participant_segments(const AudioClip& clip,
                                                           const std::vector<TranscriptEntry>& transcript,
                                                           IngestStats* stats = nullptr) {
  std::vector<AudioClip> segments;
  const auto n = static_cast<int64_t>(clip.samples.size());
  for (const auto& e : transcript) {
    if (e.speaker != Speaker::Participant) continue;
    if (stats) ++stats->participant_entries;
    auto start = static_cast<int64_t>(std::floor(e.start_s * clip.sample_rate));
    auto stop = static_cast<int64_t>(std::floor(e.stop_s * clip.sample_rate));
    if (start >= n) {
      if (stats) ++stats->entries_skipped_beyond_duration;
      continue;
    }
    if (stop > n) {
      stop = n;
      if (stats) ++stats->entries_clipped_to_duration;
    }
    if (stop <= start) continue;
    AudioClip seg;
    seg.sample_rate = clip.sample_rate;
    seg.subject_id = clip.subject_id;
    seg.label_phq8 = clip.label_phq8;
    seg.samples.assign(clip.samples.begin() + start, clip.samples.begin() + stop);
    segments.push_back(std::move(seg));
    if (stats) ++stats->segments;
  }
  return segments;
}

// Overlapping fixed-length windows: count = floor((N - W) / H) + 1.
// Segments shorter than one window yield an empty sequence.
inline std::vector<AudioWindow> slice_windows(const AudioClip& segment, int segment_index,
                                              double length_s = 1.0, double hop_s = 0.1,
                                              IngestStats* stats = nullptr) {
  std::vector<AudioWindow> windows;
  const auto n = static_cast<int64_t>(segment.samples.size());
  const auto w = static_cast<int64_t>(std::lround(length_s * segment.sample_rate));
  const auto h = static_cast<int64_t>(std::lround(hop_s * segment.sample_rate));
  if (w <= 0 || h <= 0) throw ConfigError("window length and hop must be positive");
  if (n < w) {
    if (stats) ++stats->segments_too_short;
    return windows;
  }
  const auto count = (n - w) / h + 1;
  windows.reserve(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) {
    AudioWindow win;
    win.subject_id = segment.subject_id;
    win.segment_index = segment_index;
    win.window_index = static_cast<int>(i);
    win.length_s = length_s;
    win.hop_s = hop_s;
    win.samples.assign(segment.samples.begin() + i * h, segment.samples.begin() + i * h + w);
    windows.push_back(std::move(win));
    if (stats) ++stats->windows;
  }
  return windows;
}

// ---------------------------------------------------------------------------
// Ingest manifest: subject_id, wav_path, transcript_path, phq8, gender.
// ---------------------------------------------------------------------------

struct ManifestRow {
  std::string subject_id;
  std::string wav_path;
  std::string transcript_path;
  std::optional<int> phq8;
  char gender = '?';  // 'M' or 'F'
};

inline std::vector<ManifestRow> parse_manifest_csv(const std::string& text) {
  std::vector<ManifestRow> rows;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_row(line);
    if (lineno == 1 && !fields.empty() && detail::lower(fields[0]) == "subject_id") continue;
    if (fields.size() < 5)
      throw FormatError("manifest row " + std::to_string(lineno) + ": expected 5 columns");
    ManifestRow row;
    row.subject_id = fields[0];
    row.wav_path = fields[1];
    row.transcript_path = fields[2];
    if (!fields[3].empty()) {
      int phq = 0;
      try {
        phq = std::stoi(fields[3]);
      } catch (const std::exception&) {
        throw FormatError("manifest row " + std::to_string(lineno) + ": bad phq8 value");
      }
      if (phq < 0 || phq > 24)
        throw FormatError("manifest row " + std::to_string(lineno) + ": phq8 out of [0,24]");
      row.phq8 = phq;
    }
    if (!fields[4].empty()) row.gender = static_cast<char>(std::toupper(static_cast<unsigned char>(fields[4][0])));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string format_manifest_csv(const std::vector<ManifestRow>& rows) {
  std::ostringstream out;
  out << "subject_id,wav_path,transcript_path,phq8,gender\n";
  for (const auto& r : rows) {
    out << r.subject_id << ',' << r.wav_path << ',' << r.transcript_path << ','
        << (r.phq8 ? std::to_string(*r.phq8) : "") << ',' << r.gender << '\n';
  }
  return out.str();
}

}  // namespace fedspeech
