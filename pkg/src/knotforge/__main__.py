from knotforge.cli import main

main()
