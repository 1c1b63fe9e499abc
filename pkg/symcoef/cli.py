# symcoef/cli.py
"""manage.py を経由せずに symcoef コマンドを呼ぶ入口。終了コードを返す。"""
import os
import sys
from typing import List, Optional


def run(argv: Optional[List[str]] = None) -> int:
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    import django
    from django.core.management import CommandError

    django.setup()
    from symcoef.management.commands.symcoef import Command

    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        Command().run_from_argv(['symcoef', 'symcoef', *argv])
    except SystemExit as exc:
        # argparse のエラーは 2、CommandError は returncode
        return exc.code if isinstance(exc.code, int) else 1
    except CommandError as exc:
        sys.stderr.write(f'{exc}\n')
        return exc.returncode
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
