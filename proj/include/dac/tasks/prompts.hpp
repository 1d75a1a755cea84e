#pragma once

// Prompt templates and the fixed phrases the mock backend recognizes.

#include <string_view>

namespace dac::tasks::prompts {

// Multiplication.
inline constexpr std::string_view kSplitMarker = "Please split the string a from the middle";
inline constexpr std::string_view kMulDecompose =
    "Please split the string a from the middle as two separated strings. The lengths of the "
    "two separated strings should be as close as possible. Do the same for the string b. "
    "Please only return the four strings separated by commas and do not return anything "
    "else.\na = {a}\nb = {b}";
inline constexpr std::string_view kMulTackle =
    "(1) Please compute {a}*{b}. (2) Please only return the final results and do not return "
    "anything else.";
inline constexpr std::string_view kMulMerge =
    "Sub-task results: {results}\nPlease compute x={x} and y={y}. Based on the above "
    "calculation, please compute x+y carefully step by step.";
inline constexpr std::string_view kMulIo =
    "Please compute {a}*{b}. Please only return the final result and do not return anything "
    "else.";
inline constexpr std::string_view kMulCot =
    "Please compute {a}*{b}. Let's think step by step, and state the final result at the end.";

// Hallucination detection and fact verification.
inline constexpr std::string_view kSegmentMarker =
    "Please help me segment the following paragraph as sentences";
inline constexpr std::string_view kParagraphField = "\nParagraph: ";
inline constexpr std::string_view kVerDecompose =
    "Please help me segment the following paragraph as sentences. The separated sentence "
    "should be output as: #Statement 1#: ...#Statement 2#: ...Do not say anything else. Just "
    "return the statements in the given format.\nParagraph: {candidate}";

inline constexpr std::string_view kCheckerMarker =
    "I want you to act as a factual contradiction checker";
inline constexpr std::string_view kStatementField = "\nStatement: ";
inline constexpr std::string_view kOptionA =
    "A: The statement is totally aligned with the document for sure.";
inline constexpr std::string_view kOptionB = "B: The statement contradicts with the document.";
inline constexpr std::string_view kVerTackle =
    "I want you to act as a factual contradiction checker. You are given a set of statements "
    "and a document. Among the statements, there might be one or more statement that contains "
    "contradictions with the document. Please find the problematic statement if it exist by "
    "analyzing the statements one by one. For each statement, please make a choice:\n"
    "- A: The statement is totally aligned with the document for sure.\n"
    "- B: The statement contradicts with the document.\n"
    "Document: {document}\nStatement: {statement}";

inline constexpr std::string_view kHaluQuestion =
    "Based on the above analysis, please tell me, does any statement above contain "
    "contradiction with the document? Answer Yes or No.";
inline constexpr std::string_view kFactQuestion =
    "If we connect the above statements to be a news article, based on the above "
    "analyzation, please answer me: Is there any contradiction between the document and the "
    "article? Answer Yes or No.";
inline constexpr std::string_view kHaluMergeMarker =
    "does any statement above contain contradiction with the document?";
inline constexpr std::string_view kFactMergeMarker =
    "Is there any contradiction between the document and the article?";
inline constexpr std::string_view kHaluMerge =
    "Verdicts: {results}\nBased on the above analysis, please tell me, does any statement "
    "above contain contradiction with the document? Answer Yes or No.";
inline constexpr std::string_view kFactMerge =
    "Verdicts: {results}\nIf we connect the above statements to be a news article, based on "
    "the above analyzation, please answer me: Is there any contradiction between the document "
    "and the article? Answer Yes or No.";

inline constexpr std::string_view kWholeMarker =
    "Is there any contradiction between the document and the text below?";
inline constexpr std::string_view kCandidateField = "\nText: ";
inline constexpr std::string_view kVerIo =
    "Is there any contradiction between the document and the text below? Answer Yes or No.\n"
    "Document: {document}\nText: {candidate}";
inline constexpr std::string_view kVerCot =
    "Is there any contradiction between the document and the text below? Let's think step by "
    "step, then answer Yes or No.\nDocument: {document}\nText: {candidate}";

inline constexpr std::string_view kArticleMarker = "Please extend the claim as a news article";
inline constexpr std::string_view kClaimField = "\nClaim: ";
inline constexpr std::string_view kEvidenceField = "\nEvidence: ";
inline constexpr std::string_view kArticle =
    "Please extend the claim as a news article of at least three sentences based on the "
    "evidence. Only return the article.\nEvidence: {evidence}\nClaim: {claim}";

}  // namespace dac::tasks::prompts
