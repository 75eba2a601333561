"""
码文件格式
    trifcode <N> <ell> <r>
    <码字，{1,2,3} 上的串>   （共 N 行）
"""
from ramsey3.common.exceptions import FormatParseError, InvalidParameterError
from ramsey3.domains.trifference.models import TrifferenceCode


class CodeFileService:
    """码文件读写"""

    def parse(self, text: str) -> TrifferenceCode:
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise FormatParseError("空文件")
        header = lines[0].split()
        if len(header) != 4 or header[0] != "trifcode":
            raise FormatParseError("缺少头部 'trifcode <N> <ell> <r>'", line=1)
        try:
            size, ell, r = (int(x) for x in header[1:])
        except ValueError:
            raise FormatParseError("头部参数不是整数", line=1)
        words = lines[1:]
        if len(words) != size:
            raise FormatParseError(f"声明 {size} 个码字，实际 {len(words)} 个")
        for number, word in enumerate(words, start=2):
            if len(word) != ell or any(ch not in "123" for ch in word):
                raise FormatParseError(f"码字不合法: {word}", line=number)
        try:
            return TrifferenceCode.from_strings(words, r)
        except InvalidParameterError as exc:
            raise FormatParseError(exc.message)

    def format(self, code: TrifferenceCode) -> str:
        lines = [f"trifcode {code.size} {code.ell} {code.r}"]
        lines.extend(code.strings())
        return "\n".join(lines) + "\n"
